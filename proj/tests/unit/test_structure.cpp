#include <doctest.h>

#include "pgw/oracle.hpp"
#include "pgw/structure.hpp"
#include "support.hpp"

using namespace pgw;

namespace {

Elem at(const GroupCtx& G, const char* w) { return G.index_of(G.parse_element(w)); }

std::vector<std::size_t> orders(const SeriesReport& s) { return s.orders; }

}  // namespace

TEST_SUITE("structure") {
  TEST_CASE("closures") {
    const auto& G = test::pc("heis3");
    CHECK(subgroup_closure(G, std::vector<Elem>{}).order() == 1);
    Elem c = at(G, "c");
    CHECK(subgroup_closure(G, std::vector<Elem>{c}).order() == 3);
    CHECK(subgroup_closure(G, std::vector<Elem>{at(G, "a"), at(G, "b")}).order() == 27);
    auto H = subgroup_closure(G, std::vector<Elem>{c, c, at(G, "c^2")});
    CHECK(H.generators().size() == 1);
  }

  TEST_CASE("centers and centralizers") {
    for (const char* ab : {"c3", "c9", "c3xc3"}) {
      const auto& G = test::pc(ab);
      CHECK(center(G) == whole_group(G));
      CHECK(lower_central_series(G).orders == std::vector<std::size_t>{G.order(), 1});
      CHECK(upper_central_series(G).orders == std::vector<std::size_t>{1, G.order()});
    }
    const auto& H = test::pc("heis3");
    CHECK(center(H).order() == 3);
    CHECK(center(H).contains(at(H, "c")));
    CHECK(center(H, CheckMode::Full) == center(H));
    CHECK(centralizer(H, H.identity()) == whole_group(H));
    CHECK(centralizer(H, at(H, "c^2")) == whole_group(H));
    auto Cb = centralizer(H, at(H, "b"), CheckMode::Full);
    CHECK(Cb.order() == 9);
    CHECK(Cb == subgroup_closure(H, std::vector<Elem>{at(H, "b"), at(H, "c")}));
    CHECK(center(test::pc("c3wrc3")).order() == 3);
  }

  TEST_CASE("series") {
    CHECK(orders(lower_central_series(test::pc("heis3"))) == std::vector<std::size_t>{27, 3, 1});
    CHECK(orders(upper_central_series(test::pc("heis3"))) == std::vector<std::size_t>{1, 3, 27});
    CHECK(orders(lower_central_series(test::pc("c3wrc3"))) == std::vector<std::size_t>{81, 9, 3, 1});
    CHECK(orders(upper_central_series(test::pc("c3wrc3"))) == std::vector<std::size_t>{1, 3, 9, 81});
    CHECK(orders(lower_central_series(test::pc("trivial"))) == std::vector<std::size_t>{1});
  }

  TEST_CASE("Frattini, exponent, omega and agemo") {
    const auto& E = test::pc("c3xc3");
    CHECK(frattini(E).order() == 1);
    CHECK(omega1(whole_group(E)) == whole_group(E));
    CHECK(agemo1(whole_group(E)).order() == 1);
    const auto& H = test::pc("heis3");
    CHECK(frattini(H).order() == 3);
    CHECK(subgroup_exponent(whole_group(H)) == 3);
    CHECK(agemo1(whole_group(H)).order() == 1);
    const auto& C9 = test::pc("c9");
    CHECK(frattini(C9).order() == 3);
    CHECK(omega1(whole_group(C9)).order() == 3);
    CHECK(agemo1(whole_group(C9)).order() == 3);
    const auto& T = test::pc("trivial");
    CHECK(subgroup_exponent(whole_group(T)) == 1);
    CHECK(omega1(whole_group(T)).order() == 1);
    CHECK(subgroup_exponent(whole_group(test::pc("c3wrc3"))) == 9);
  }

  TEST_CASE("class, coclass and generator counts") {
    CHECK(nilpotency_class(test::pc("c9")) == 1);
    CHECK(nilpotency_class(test::pc("heis3")) == 2);
    CHECK(nilpotency_class(test::pc("c3wrc3")) == 3);
    CHECK(coclass(test::pc("heis3")) == 1);
    CHECK(coclass(test::pc("c3wrc3")) == 1);
    CHECK(coclass(test::pc("c3wrc3xc3")) == 2);
    CHECK(nilpotency_class(test::pc("c3wrc3xc3")) == 3);
    CHECK(coclass(test::pc("trivial")) == 0);
    CHECK(min_generators(test::pc("c3xc3")) == 2);
    CHECK(min_generators(test::pc("heis3")) == 2);
    CHECK(min_generators(test::pc("c9")) == 1);
  }

  TEST_CASE("predicates") {
    CHECK(is_p_abelian(test::pc("heis3")));
    CHECK(is_regular(test::pc("heis3")));
    CHECK_FALSE(is_p_abelian(test::pc("c3wrc3")));
    const auto bad = regularity_counterexample(test::pc("c3wrc3"));
    REQUIRE(bad.has_value());
    CHECK_FALSE(is_regular(test::perm("c3wrc3")));
    CHECK(has_cyclic_subgroup_of_index(test::pc("c3wrc3"), 2));
    CHECK_FALSE(has_cyclic_subgroup_of_index(test::pc("c3wrc3"), 1));
    CHECK(is_cyclic(whole_group(test::pc("c9"))));
    CHECK_FALSE(is_cyclic(whole_group(test::pc("c3xc3"))));
    // class < p implies regular
    for (const char* name : {"heis5", "modular125", "heis3", "modular27", "metacyclic81", "heis3xc3"})
      CHECK(is_regular(test::pc(name)));
  }

  TEST_CASE("structural identities on every corpus group") {
    for (const auto* e : test::loaded_entries()) {
      CAPTURE(e->name);
      const auto& G = e->loaded->group();
      auto lower = lower_central_series(G);
      auto upper = upper_central_series(G);
      const Subgroup whole = whole_group(G);
      const Subgroup gamma2 = lower.terms.size() > 1 ? lower.terms[1] : trivial_subgroup(G);
      const Subgroup Phi = frattini(G);
      CHECK(center(G) == (upper.terms.size() > 1 ? upper.terms[1] : whole));
      CHECK(gamma2.is_subset_of(Phi));
      CHECK(product(agemo1(whole), gamma2) == Phi);
      if (lower.terms.size() >= 2) {
        const Subgroup& last = lower.terms[lower.terms.size() - 2];
        CHECK(last.is_subset_of(center(G)));
      }
      if (is_p_abelian(G) && !gamma2.is_trivial()) CHECK(subgroup_exponent(gamma2) == G.prime());
      CHECK(lower.terms.size() == upper.terms.size());
    }
  }

  TEST_CASE("centralizer index equals conjugacy class size") {
    for (const char* name : {"heis3", "c3wrc3", "modular27", "metacyclic81"}) {
      const auto& G = test::pc(name);
      for (Elem x = 0; x < G.order(); ++x)
        CHECK(centralizer(G, x).order() * conjugacy_class(G, x).size() == G.order());
    }
  }

  TEST_CASE("invariants agree with the oracle on every corpus group") {
    for (const auto* e : test::loaded_entries()) {
      CAPTURE(e->name);
      const auto& G = e->loaded->group();
      auto report = compare_invariants(compute_invariants(G), oracle_recompute(G).invariants);
      for (const auto& f : report.fields) {
        CAPTURE(f.field);
        CHECK(f.pc_value == f.perm_value);
      }
    }
  }

  TEST_CASE("rendering") {
    CHECK(render_orders({81, 9, 3, 1}) == "[81, 9, 3, 1]");
    const auto& G = test::pc("heis3");
    CHECK(render_subgroup(center(G)) == "<c^1> (order 3)");
  }
}
