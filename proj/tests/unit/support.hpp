#pragma once

#include <string>
#include <vector>

#include <doctest.h>

#include "pgw/corpus.hpp"
#include "pgw/oracle.hpp"
#include "pgw/pcgroup.hpp"

namespace pgw::test {

/// Default corpus, loaded once per test binary.
inline const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = load_corpus();
  return entries;
}

inline const CorpusEntry& entry(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  FAIL("no corpus entry " << name);
  throw;
}

inline const GroupCtx& pc(const std::string& group) { return *entry(group + ".pcg").loaded->pc; }
inline const PermGroup& perm(const std::string& group) { return *entry(group + ".perm").loaded->perm; }

inline GroupCtx ctx(const std::string& text) { return GroupCtx::create(parse_presentation(text)); }

/// Right regular representation of G: element u becomes i -> i u, so the
/// permutation group is isomorphic to G via index u <-> perm of u.
inline PermGroup regular_representation(const AbstractGroup& G) {
  std::vector<Permutation> gens;
  for (Elem s : G.generators()) {
    Permutation p(G.order());
    for (Elem i = 0; i < G.order(); ++i) p[i] = static_cast<std::uint16_t>(G.multiply(i, s));
    gens.push_back(p);
  }
  return PermGroup::from_generators("regular", G.order(), gens);
}

inline std::vector<const CorpusEntry*> loaded_entries(std::size_t max_order = 1u << 30) {
  std::vector<const CorpusEntry*> out;
  for (const auto& e : corpus())
    if (e.loaded && e.loaded->group().order() <= max_order) out.push_back(&e);
  return out;
}

}  // namespace pgw::test
