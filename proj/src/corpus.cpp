#include "pgw/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pgw/errors.hpp"

#ifndef PGW_CORPUS_DIR
#define PGW_CORPUS_DIR "corpus"
#endif

namespace pgw {

std::string_view to_string(GroupFormat f) { return f == GroupFormat::Pc ? "pc" : "perm"; }

const AbstractGroup& LoadedGroup::group() const {
  if (pc) return *pc;
  return *perm;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
  return buf.str();
}

GroupFormat detect_format(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    if (auto hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
    auto start = line.find_first_not_of(" \t\r");
    if (start == line.npos) continue;
    line = line.substr(start);
    auto end = line.find_first_of(" \t\r");
    return line.substr(0, end) == "permgroup" ? GroupFormat::Perm : GroupFormat::Pc;
  }
  return GroupFormat::Pc;
}

LoadedGroup load_group_text(std::string_view text, std::size_t max_order) {
  LoadedGroup out;
  out.format = detect_format(text);
  if (out.format == GroupFormat::Perm) {
    PermSource src = parse_perm_source(text);
    out.name = src.name;
    out.perm = std::make_shared<const PermGroup>(PermGroup::from_source(src, max_order));
  } else {
    PcPresentation pres = parse_presentation(text);
    out.name = pres.name();
    out.pc = std::make_shared<const GroupCtx>(GroupCtx::create(pres, max_order));
    out.presentation = std::move(pres);
  }
  return out;
}

LoadedGroup load_group_file(const std::filesystem::path& path, std::size_t max_order) {
  return load_group_text(read_text_file(path), max_order);
}

bool CorpusEntry::has_tag(std::string_view tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

std::filesystem::path default_corpus_dir() { return PGW_CORPUS_DIR; }

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir, bool include_slow) {
  const auto manifest_path = dir / "manifest.json";
  nlohmann::ordered_json manifest;
  try {
    manifest = nlohmann::ordered_json::parse(read_text_file(manifest_path));
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed corpus manifest '" + manifest_path.string() + "': " + e.what());
  }

  std::vector<CorpusEntry> out;
  for (const auto& item : manifest.at("entries")) {
    CorpusEntry e;
    e.name = item.at("name").get<std::string>();
    e.group = item.value("group", e.name);
    e.path = dir / item.at("file").get<std::string>();
    e.format = item.at("format").get<std::string>() == "perm" ? GroupFormat::Perm : GroupFormat::Pc;
    e.tags = item.value("tags", std::vector<std::string>{});
    e.slow = item.value("slow", false);
    if (item.contains("expected"))
      for (const auto& [k, v] : item.at("expected").items())
        e.expected_invariants.emplace_back(k, v.get<std::string>());
    if (e.slow && !include_slow) continue;

    const std::string text = read_text_file(e.path);
    if (e.has_tag("inconsistent")) {
      PcPresentation pres = parse_presentation(text);
      auto overlap = check_consistency(pres, ConsistencyMode::OverlapTests);
      auto full = check_consistency(pres, ConsistencyMode::FullAssociativity);
      if (overlap.consistent || full.consistent)
        throw InconsistentPresentation("corpus entry '" + e.name +
                                       "' is tagged inconsistent but passes a consistency check");
    } else {
      e.loaded = load_group_text(text);
      if (e.loaded->presentation) {
        auto full = check_consistency(*e.loaded->presentation, ConsistencyMode::FullAssociativity);
        if (!full.consistent)
          throw InconsistentPresentation("corpus entry '" + e.name + "' fails full associativity");
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::pair<const CorpusEntry*, const CorpusEntry*>> backend_pairs(
    const std::vector<CorpusEntry>& corpus) {
  std::vector<std::pair<const CorpusEntry*, const CorpusEntry*>> out;
  for (const auto& a : corpus) {
    if (a.format != GroupFormat::Pc || !a.loaded) continue;
    for (const auto& b : corpus)
      if (b.format == GroupFormat::Perm && b.loaded && b.group == a.group) out.emplace_back(&a, &b);
  }
  return out;
}

}  // namespace pgw
