#include <doctest.h>

#include <string>

#include "pgw/errors.hpp"
#include "pgw/presentation.hpp"
#include "support.hpp"

using namespace pgw;

namespace {

const char* kHeis3 = "group heis3\nprime 3\ngens a b c\ncomm b a = c\n";

std::string parse_error(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("presentation") {
  TEST_CASE("heis3 parses with prime 3 and rank 3") {
    auto pres = parse_presentation(kHeis3);
    CHECK(pres.name() == "heis3");
    CHECK(pres.prime() == 3);
    CHECK(pres.rank() == 3);
  }

  TEST_CASE("canonical form of heis3 lists every relation") {
    const std::string expected =
        "group heis3\nprime 3\ngens a b c\n"
        "pow a = \npow b = \npow c = \n"
        "comm b a = c^1\ncomm c a = \ncomm c b = \n";
    CHECK(serialize_presentation(parse_presentation(kHeis3)) == expected);
  }

  TEST_CASE("rank 0 serializes as a header-only file") {
    auto text = serialize_presentation(parse_presentation("group trivial\nprime 3\ngens\n"));
    CHECK(text == "group trivial\nprime 3\ngens\n");
  }

  TEST_CASE("C9 in rank 2 has two power lines and one identity commutator line") {
    auto text = serialize_presentation(parse_presentation("group c9\nprime 3\ngens a b\npow a = b\n"));
    CHECK(text == "group c9\nprime 3\ngens a b\npow a = b^1\npow b = \ncomm b a = \n");
  }

  TEST_CASE("round trip over the corpus") {
    for (const auto& e : test::corpus()) {
      if (e.format != GroupFormat::Pc) continue;
      CAPTURE(e.name);
      auto pres = parse_presentation(read_text_file(e.path));
      auto again = parse_presentation(serialize_presentation(pres));
      CHECK(pres == again);
      CHECK(serialize_presentation(again) == serialize_presentation(pres));
    }
  }

  TEST_CASE("parse errors carry positions and reasons") {
    CHECK(parse_error("group g\nprime 3\ngens a b c\ncomm a b = c\n").find("malformed commutator relation") !=
          std::string::npos);
    CHECK(parse_error("group g\nprime 2\ngens a\n").find("prime must be odd") != std::string::npos);
    CHECK(parse_error("group g\nprime 9\ngens a\n").find("line 2") != std::string::npos);
    CHECK(parse_error("group g\nprime 3\ngens a b\npow a = z\n").find("unknown generator") != std::string::npos);
    CHECK(parse_error("group g\nprime 3\ngens a b\npow a = b^3\n").find("line 4") != std::string::npos);
    CHECK(parse_error("group g\nprime 3\ngens a b c\ncomm c b = a\n").find("line 4") != std::string::npos);
    CHECK(parse_error("group g\nprime 3\ngens a b\npow a = b\npow a = b\n").find("duplicate") !=
          std::string::npos);
    CHECK(parse_error("group g\nprime 3\ngens a b c\npow a = c b\n").find("increasing") != std::string::npos);
    CHECK(parse_error("prime 3\ngens a\n").find("group") != std::string::npos);
    CHECK(parse_error("group g\nprime 3\ngens a\nfrob a\n").find("unknown directive") != std::string::npos);
    CHECK_FALSE(parse_error("group g\nprime 3\ngens a b c\ncomm c b = c\n").empty());
  }

  TEST_CASE("the word-shape rules are enforced") {
    // [g_j, g_i] may only use generators above g_j.
    CHECK_THROWS_AS(parse_presentation("group g\nprime 3\ngens a b c\ncomm c a = c\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("group g\nprime 3\ngens a b\npow b = a\n"), ParseError);
    CHECK_NOTHROW(parse_presentation("group g\nprime 3\ngens a b\npow a = b^2\n"));
    CHECK_NOTHROW(parse_presentation("group g\nprime 3\ngens a b\npow a = 1\n"));
  }

  TEST_CASE("comments and blank lines are ignored") {
    auto pres = parse_presentation("# leading\n\ngroup g  # name\nprime 5\n\ngens x y\n");
    CHECK(pres.prime() == 5);
    CHECK(pres.rank() == 2);
  }

  TEST_CASE("consistency: heis3 and C3 wr C3 pass both modes") {
    for (const char* text : {kHeis3, "group w\nprime 3\ngens a b c d\ncomm b a = c\ncomm c a = d\n"}) {
      auto pres = parse_presentation(text);
      CHECK(check_consistency(pres, ConsistencyMode::OverlapTests).consistent);
      auto full = check_consistency(pres, ConsistencyMode::FullAssociativity);
      CHECK(full.consistent);
      CHECK(full.method == ConsistencyMode::FullAssociativity);
      CHECK(full.failures.empty());
    }
  }

  TEST_CASE("consistency: the bad sample fails both modes with failures listed") {
    auto pres = parse_presentation(read_text_file(default_corpus_dir() / "bad-sample.pcg"));
    auto overlap = check_consistency(pres, ConsistencyMode::OverlapTests);
    auto full = check_consistency(pres, ConsistencyMode::FullAssociativity);
    CHECK_FALSE(overlap.consistent);
    CHECK_FALSE(full.consistent);
    CHECK(!overlap.failures.empty());
    CHECK(overlap.failures.front().lhs != overlap.failures.front().rhs);
  }

  TEST_CASE("consistency: modes agree on every corpus presentation") {
    for (const auto& e : test::corpus()) {
      if (e.format != GroupFormat::Pc) continue;
      CAPTURE(e.name);
      auto pres = parse_presentation(read_text_file(e.path));
      CHECK(check_consistency(pres, ConsistencyMode::OverlapTests).consistent ==
            check_consistency(pres, ConsistencyMode::FullAssociativity).consistent);
    }
  }

  TEST_CASE("a^5 = b with [b, a] = c is inconsistent at p = 5") {
    auto pres = parse_presentation("group g\nprime 5\ngens a b c\npow a = b\ncomm b a = c\n");
    CHECK_FALSE(check_consistency(pres, ConsistencyMode::OverlapTests).consistent);
    CHECK_FALSE(check_consistency(pres, ConsistencyMode::FullAssociativity).consistent);
    CHECK_THROWS_AS(GroupCtx::create(pres), InconsistentPresentation);
  }

  TEST_CASE("full associativity respects its cap") {
    auto pres = PcPresentation::elementary_abelian("big", 3, {"a", "b", "c", "d", "e", "f", "g", "h"});
    CHECK_THROWS_AS(check_consistency(pres, ConsistencyMode::FullAssociativity, 2187), ResourceLimit);
    CHECK(check_consistency(pres, ConsistencyMode::OverlapTests).consistent);
  }
}
