#include <doctest.h>

#include <map>
#include <set>

#include "pgw/errors.hpp"
#include "support.hpp"

using namespace pgw;

TEST_SUITE("corpus") {
  TEST_CASE("required groups and tags are present") {
    std::set<std::string> groups;
    for (const auto& e : test::corpus()) groups.insert(e.group);
    for (const char* g : {"heis3", "es27e3", "c3wrc3", "c3wrc3xc3", "heis5", "modular125", "c3", "trivial"})
      CHECK(groups.count(g) == 1);
    std::size_t thm = 0;
    for (const auto& e : test::corpus())
      if (e.has_tag("thm_2_1")) ++thm;
    CHECK(thm >= 4);
    CHECK(test::entry("bad-sample.pcg").has_tag("inconsistent"));
    CHECK_FALSE(test::entry("bad-sample.pcg").loaded.has_value());
  }

  TEST_CASE("slow entries load only on request") {
    for (const auto& e : test::corpus()) CHECK_FALSE(e.slow);
  }

  TEST_CASE("committed expectations match a fresh oracle recomputation") {
    for (const auto* e : test::loaded_entries()) {
      CAPTURE(e->name);
      auto fresh = invariant_fields(oracle_recompute(e->loaded->group()).invariants);
      CHECK(std::map(fresh.begin(), fresh.end()) ==
            std::map(e->expected_invariants.begin(), e->expected_invariants.end()));
    }
  }

  TEST_CASE("both formats of a group agree") {
    auto pairs = backend_pairs(test::corpus());
    CHECK(pairs.size() >= 10);
    for (auto [pc, perm] : pairs) {
      CAPTURE(pc->group);
      CHECK(pc->expected_invariants == perm->expected_invariants);
    }
  }

  TEST_CASE("format detection and loading") {
    CHECK(detect_format("# x\n\npermgroup w\ndegree 3\n") == GroupFormat::Perm);
    CHECK(detect_format("group g\nprime 3\ngenerators a\n") == GroupFormat::Pc);
    auto g = load_group_text("permgroup t\ndegree 3\ngen (1 2 3)\n");
    CHECK(g.format == GroupFormat::Perm);
    CHECK(g.name == "t");
    CHECK(g.group().order() == 3);
    CHECK_THROWS_AS(load_group_file("/nonexistent/x.pcg"), IoError);
  }
}
