#include <doctest.h>

#include "pgw/errors.hpp"
#include "pgw/oracle.hpp"
#include "pgw/parallel.hpp"
#include "pgw/witness.hpp"
#include "support.hpp"

using namespace pgw;

namespace {

Permutation perm_from(std::size_t degree, std::initializer_list<std::vector<std::uint16_t>> cycles) {
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint16_t>(i);
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) p[c[k] - 1] = static_cast<std::uint16_t>(c[(k + 1) % c.size()] - 1);
  return p;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("closure sizes") {
    CHECK(perm_group_from_generators("c3", 3, {perm_from(3, {{1, 2, 3}})}).order() == 3);
    auto w = perm_group_from_generators(
        "w", 9, {perm_from(9, {{1, 4, 7}, {2, 5, 8}, {3, 6, 9}}), perm_from(9, {{1, 2, 3}})});
    CHECK(w.order() == 81);
    CHECK(w.prime() == 3);
    CHECK(perm_group_from_generators("t", 4, {}).order() == 1);
  }

  TEST_CASE("order restrictions") {
    CHECK_THROWS_AS(perm_group_from_generators("s3", 3, {perm_from(3, {{1, 2, 3}}), perm_from(3, {{1, 2}})}),
                    PreconditionError);
    CHECK_THROWS_AS(perm_group_from_generators("c2", 2, {perm_from(2, {{1, 2}})}), PreconditionError);
    CHECK_THROWS_AS(perm_group_from_generators("big", 9, {perm_from(9, {{1, 2, 3}}), perm_from(9, {{4, 5, 6}}),
                                                          perm_from(9, {{7, 8, 9}})},
                                               9),
                    ResourceLimit);
  }

  TEST_CASE("permutation source parsing") {
    auto src = parse_perm_source("# c\npermgroup w\ndegree 9\ngen (1 4 7)(2 5 8)(3 6 9)\ngen (1 2 3)\n");
    CHECK(src.name == "w");
    CHECK(src.generators.size() == 2);
    CHECK_THROWS_AS(parse_perm_source("permgroup w\ndegree 3\ngen (1 4)\n"), ParseError);
    CHECK_THROWS_AS(parse_perm_source("permgroup w\ndegree 3\ngen (1 2)(2 3)\n"), ParseError);
    CHECK_THROWS_AS(parse_perm_source("permgroup w\ngen (1 2)\n"), ParseError);
    CHECK_THROWS_AS(parse_perm_source("permgroup w\ndegree 3\ngen (1 2\n"), ParseError);
    auto G = PermGroup::from_source(src);
    CHECK(G.render(G.identity()) == "()");
    CHECK(G.render(G.generators()[1]) == "(1 2 3)");
  }

  TEST_CASE("snapshots") {
    auto h = oracle_recompute(test::perm("heis3"));
    CHECK(h.invariants.center_order == 3);
    CHECK(h.invariants.gamma_orders == std::vector<std::size_t>{27, 3, 1});
    CHECK(h.invariants.frattini_order == 3);
    CHECK(h.invariants.exponent == 3);
    CHECK(h.maximal_subgroup_count == 4);
    auto w = oracle_recompute(test::perm("c3wrc3"));
    CHECK(w.invariants.gamma_orders == std::vector<std::size_t>{81, 9, 3, 1});
    CHECK(w.invariants.exponent == 9);
    auto t = oracle_recompute(test::perm("trivial"));
    CHECK(t.invariants.order == 1);
    CHECK(t.invariants.center_order == 1);
    CHECK(t.invariants.gamma_orders == std::vector<std::size_t>{1});
  }

  TEST_CASE("Frattini routes agree on every corpus group") {
    for (const auto* e : test::loaded_entries()) {
      CAPTURE(e->name);
      auto snap = oracle_recompute(e->loaded->group());
      CHECK(snap.frattini_routes_agree);
      CHECK(oracle_frattini(e->loaded->group()).order() == snap.invariants.frattini_order);
    }
  }

  TEST_CASE("exhaustive search examples") {
    const auto& H = test::pc("heis3");
    auto f = exhaustive_noninner_search(H, true);
    REQUIRE(f.has_value());
    CHECK(automorphism_order(*f) == 3);
    CHECK_FALSE(is_inner(*f).has_value());
    CHECK(fixes_elementwise(*f, frattini(H)));

    const auto& C9 = test::pc("c9");
    auto g = exhaustive_noninner_search(C9, true);
    REQUIRE(g.has_value());
    const Elem a = C9.generators()[0];
    CHECK(g->apply(a) == power(C9, a, 4));

    CHECK_FALSE(exhaustive_noninner_search(test::pc("c3"), true).has_value());
    CHECK_FALSE(exhaustive_noninner_search(test::pc("trivial"), true).has_value());
    CHECK(all_automorphisms(test::pc("c3")).size() == 2);
    CHECK(all_automorphisms(test::perm("c3xc3")).size() == 48);
  }

  TEST_CASE("search cap") {
    SearchLimits tight;
    tight.max_order = 27;
    CHECK_THROWS_AS(exhaustive_noninner_search(test::pc("c3wrc3"), true, tight), ResourceLimit);
  }

  TEST_CASE("search is independent of the worker count") {
    const auto& G = test::pc("c3wrc3xc3");
    set_worker_count(1);
    auto one = exhaustive_noninner_search(G, true);
    set_worker_count(4);
    auto four = exhaustive_noninner_search(G, true);
    REQUIRE(one.has_value());
    REQUIRE(four.has_value());
    CHECK(one->images() == four->images());
  }

  TEST_CASE("cross validation") {
    auto same = cross_validate(test::pc("heis3"), test::perm("heis3"));
    CHECK(same.all_equal);
    auto diff = cross_validate(test::pc("heis3"), test::perm("c3wrc3"));
    CHECK_FALSE(diff.all_equal);
    CHECK_FALSE(diff.fields.front().equal);
    CHECK(cross_validate(test::pc("c9"), test::perm("c9")).all_equal);
    for (auto [pc, perm] : backend_pairs(test::corpus())) {
      CAPTURE(pc->group);
      CHECK(cross_validate(*pc->loaded->pc, *perm->loaded->perm).all_equal);
    }
  }
}
