#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgw/group.hpp"
#include "pgw/oracle.hpp"
#include "pgw/pcgroup.hpp"
#include "pgw/presentation.hpp"

namespace pgw {

enum class GroupFormat { Pc, Perm };

std::string_view to_string(GroupFormat f);

/// A parsed group file. Exactly one of pc / perm is set; the group objects
/// are heap-allocated so that subgroups and automorphisms may keep pointers
/// to them while the LoadedGroup is moved around.
struct LoadedGroup {
  GroupFormat format = GroupFormat::Pc;
  std::string name;
  std::optional<PcPresentation> presentation;
  std::shared_ptr<const GroupCtx> pc;
  std::shared_ptr<const PermGroup> perm;

  const AbstractGroup& group() const;
};

/// Throws IoError when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);

/// "permgroup" as the first directive selects the permutation format,
/// anything else the pc format.
GroupFormat detect_format(std::string_view text);

/// Parses and builds the group. Throws ParseError, InconsistentPresentation,
/// ResourceLimit or PreconditionError.
LoadedGroup load_group_text(std::string_view text, std::size_t max_order = default_max_order());
LoadedGroup load_group_file(const std::filesystem::path& path,
                            std::size_t max_order = default_max_order());

struct CorpusEntry {
  std::string name;
  /// Groups given in both formats share this key.
  std::string group;
  GroupFormat format = GroupFormat::Pc;
  std::filesystem::path path;
  std::vector<std::string> tags;
  /// (field, rendered value) in invariant_fields order; empty for the
  /// inconsistent sample.
  std::vector<std::pair<std::string, std::string>> expected_invariants;
  bool slow = false;
  /// Set for every entry except those tagged "inconsistent".
  std::optional<LoadedGroup> loaded;

  bool has_tag(std::string_view tag) const;
};

/// Directory given at build time (the repository's corpus/).
std::filesystem::path default_corpus_dir();

/// Reads manifest.json, then parses and consistency-checks every listed file.
/// Entries marked slow are skipped unless include_slow. Throws IoError for an
/// unreadable file and InconsistentPresentation if a file is inconsistent
/// without the "inconsistent" tag, or consistent with it.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir = default_corpus_dir(),
                                     bool include_slow = false);

/// Pairs (pc entry, perm entry) with the same group key.
std::vector<std::pair<const CorpusEntry*, const CorpusEntry*>> backend_pairs(
    const std::vector<CorpusEntry>& corpus);

}  // namespace pgw
