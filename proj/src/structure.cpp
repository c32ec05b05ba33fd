#include "pgw/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "pgw/parallel.hpp"

namespace pgw {

Subgroup::Subgroup(const AbstractGroup& ambient, std::vector<Elem> elements,
                   std::vector<Elem> generators)
    : ambient_(&ambient),
      elements_(std::move(elements)),
      generators_(std::move(generators)),
      member_(ambient.order(), false) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (Elem h : elements_) {
    if (h >= member_.size()) throw std::out_of_range("subgroup element outside ambient group");
    member_[h] = true;
  }
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Elem h) { return other.contains(h); });
}

Subgroup whole_group(const AbstractGroup& G) {
  std::vector<Elem> all(G.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return Subgroup(G, std::move(all), G.generators());
}

Subgroup trivial_subgroup(const AbstractGroup& G) { return Subgroup(G, {G.identity()}, {}); }

Subgroup subgroup_closure(const AbstractGroup& G, std::span<const Elem> gens) {
  std::vector<bool> member(G.order(), false);
  std::vector<Elem> elements{G.identity()};
  member[G.identity()] = true;
  std::vector<Elem> chosen;

  for (Elem s : gens) {
    if (member.at(s)) continue;
    chosen.push_back(s);
    // Every old element times the old generators is already present, so the
    // sweep may start from the whole current element list.
    std::deque<Elem> queue(elements.begin(), elements.end());
    while (!queue.empty()) {
      Elem u = queue.front();
      queue.pop_front();
      for (Elem t : chosen) {
        Elem v = G.multiply(u, t);
        if (!member[v]) {
          member[v] = true;
          elements.push_back(v);
          queue.push_back(v);
        }
      }
    }
  }
  return Subgroup(G, std::move(elements), std::move(chosen));
}

Subgroup normal_closure(const AbstractGroup& G, std::span<const Elem> gens) {
  Subgroup H = subgroup_closure(G, gens);
  for (;;) {
    std::vector<Elem> extra;
    for (Elem h : H.generators())
      for (Elem g : G.generators()) {
        Elem c = conjugate(G, h, g);
        if (!H.contains(c)) extra.push_back(c);
      }
    if (extra.empty()) return H;
    std::vector<Elem> all = H.generators();
    all.insert(all.end(), extra.begin(), extra.end());
    H = subgroup_closure(G, all);
  }
}

Subgroup commutator_subgroup(const Subgroup& A, const Subgroup& B) {
  const auto& G = A.ambient();
  std::vector<Elem> comms;
  for (Elem a : A.elements())
    for (Elem b : B.generators()) comms.push_back(commutator(G, a, b));
  // [a, b1 b2] = [a, b2] [a, b1]^{b2}: close under conjugation by B as well.
  Subgroup H = subgroup_closure(G, comms);
  for (;;) {
    std::vector<Elem> extra;
    for (Elem h : H.generators())
      for (Elem b : B.generators()) {
        Elem c = conjugate(G, h, b);
        if (!H.contains(c)) extra.push_back(c);
      }
    if (extra.empty()) return H;
    std::vector<Elem> all = H.generators();
    all.insert(all.end(), extra.begin(), extra.end());
    H = subgroup_closure(G, all);
  }
}

Subgroup product(const Subgroup& A, const Subgroup& B) {
  const auto& G = A.ambient();
  std::vector<Elem> elems;
  elems.reserve(A.order() * B.order());
  for (Elem a : A.elements())
    for (Elem b : B.elements()) elems.push_back(G.multiply(a, b));
  std::vector<Elem> gens = A.generators();
  gens.insert(gens.end(), B.generators().begin(), B.generators().end());
  return Subgroup(G, std::move(elems), std::move(gens));
}

namespace {

std::vector<Elem> test_set(const AbstractGroup& G, CheckMode mode) {
  if (mode == CheckMode::Fast) return G.generators();
  std::vector<Elem> all(G.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return all;
}

bool commutes(const AbstractGroup& G, Elem a, Elem b) {
  return G.multiply(a, b) == G.multiply(b, a);
}

}  // namespace

Subgroup center(const AbstractGroup& G, CheckMode mode) {
  const auto tests = test_set(G, mode);
  std::vector<Elem> z;
  for (Elem h = 0; h < G.order(); ++h)
    if (std::all_of(tests.begin(), tests.end(), [&](Elem t) { return commutes(G, h, t); }))
      z.push_back(h);
  return subgroup_closure(G, z);
}

Subgroup centralizer(const AbstractGroup& G, Elem x, CheckMode mode) {
  std::vector<Elem> c;
  for (Elem h = 0; h < G.order(); ++h)
    if (commutes(G, h, x)) c.push_back(h);
  Subgroup H = subgroup_closure(G, c);
  if (mode == CheckMode::Full && H.order() != c.size())
    throw std::logic_error("centralizer element set is not closed");
  return H;
}

std::vector<Elem> conjugacy_class(const AbstractGroup& G, Elem x) {
  std::vector<Elem> cls;
  for (Elem y = 0; y < G.order(); ++y) cls.push_back(conjugate(G, x, y));
  std::sort(cls.begin(), cls.end());
  cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
  return cls;
}

SeriesReport lower_central_series(const AbstractGroup& G) {
  SeriesReport out{SeriesKind::LowerCentral, {}, {}};
  const Subgroup whole = whole_group(G);
  Subgroup term = whole;
  for (;;) {
    out.orders.push_back(term.order());
    out.terms.push_back(term);
    if (term.is_trivial()) break;
    Subgroup next = commutator_subgroup(term, whole);
    if (next.order() == term.order())
      throw std::logic_error("lower central series stalls: group is not nilpotent");
    term = std::move(next);
  }
  return out;
}

SeriesReport upper_central_series(const AbstractGroup& G) {
  SeriesReport out{SeriesKind::UpperCentral, {}, {}};
  Subgroup term = trivial_subgroup(G);
  const auto& gens = G.generators();
  for (;;) {
    out.orders.push_back(term.order());
    out.terms.push_back(term);
    if (term.order() == G.order()) break;
    std::vector<Elem> next;
    for (Elem h = 0; h < G.order(); ++h)
      if (std::all_of(gens.begin(), gens.end(),
                      [&](Elem g) { return term.contains(commutator(G, h, g)); }))
        next.push_back(h);
    Subgroup nt = subgroup_closure(G, next);
    if (nt.order() == term.order())
      throw std::logic_error("upper central series stalls: group is not nilpotent");
    term = std::move(nt);
  }
  return out;
}

Subgroup frattini(const AbstractGroup& G) {
  const Subgroup whole = whole_group(G);
  const Subgroup gamma2 = commutator_subgroup(whole, whole);
  std::vector<Elem> gens = gamma2.generators();
  for (Elem h = 0; h < G.order(); ++h) gens.push_back(power(G, h, G.prime()));
  return subgroup_closure(G, gens);
}

std::uint64_t subgroup_exponent(const Subgroup& H) {
  std::uint64_t e = 1;
  for (Elem h : H.elements()) e = std::lcm(e, element_order(H.ambient(), h));
  return e;
}

Subgroup omega1(const Subgroup& H) {
  const auto& G = H.ambient();
  std::vector<Elem> gens;
  for (Elem h : H.elements())
    if (power(G, h, G.prime()) == G.identity()) gens.push_back(h);
  return subgroup_closure(G, gens);
}

Subgroup agemo1(const Subgroup& H) {
  const auto& G = H.ambient();
  std::vector<Elem> gens;
  for (Elem h : H.elements()) gens.push_back(power(G, h, G.prime()));
  return subgroup_closure(G, gens);
}

std::size_t log_order(const AbstractGroup& G) {
  std::size_t m = 0;
  for (std::size_t n = G.order(); n > 1; n /= G.prime()) ++m;
  return m;
}

std::size_t nilpotency_class(const AbstractGroup& G) {
  return lower_central_series(G).terms.size() - 1;
}

std::size_t coclass(const AbstractGroup& G) {
  if (G.order() == 1) return 0;
  return log_order(G) - nilpotency_class(G);
}

std::size_t min_generators(const AbstractGroup& G) {
  if (G.order() == 1) return 0;
  std::size_t index = G.order() / frattini(G).order();
  std::size_t d = 0;
  for (; index > 1; index /= G.prime()) ++d;
  return d;
}

bool is_abelian(const Subgroup& H) {
  const auto& G = H.ambient();
  const auto& gens = H.generators();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (!commutes(G, gens[a], gens[b])) return false;
  return true;
}

bool is_elementary_abelian(const Subgroup& H) {
  if (!is_abelian(H)) return false;
  const auto& G = H.ambient();
  return std::all_of(H.generators().begin(), H.generators().end(),
                     [&](Elem h) { return power(G, h, G.prime()) == G.identity(); });
}

std::uint64_t max_cyclic_order(const Subgroup& H) {
  std::uint64_t best = 1;
  for (Elem h : H.elements()) best = std::max(best, element_order(H.ambient(), h));
  return best;
}

bool is_cyclic(const Subgroup& H) { return max_cyclic_order(H) == H.order(); }

bool has_cyclic_subgroup_of_index(const AbstractGroup& G, unsigned k) {
  if (G.prime() == 0) return k == 0;
  std::size_t index = 1;
  for (unsigned r = 0; r < k; ++r) {
    index *= G.prime();
    if (index > G.order()) return false;
  }
  if (G.order() % index != 0) return false;
  // A cyclic subgroup of order at least |G|/p^k contains one of exactly that order.
  return max_cyclic_order(whole_group(G)) >= G.order() / index;
}

std::optional<std::pair<Elem, Elem>> p_abelian_counterexample(const AbstractGroup& G) {
  const std::size_t n = G.order();
  std::vector<Elem> pw(n);
  for (Elem h = 0; h < n; ++h) pw[h] = power(G, h, G.prime());
  auto bad = [&](Elem x, Elem y) { return pw[G.multiply(x, y)] != G.multiply(pw[x], pw[y]); };
  auto row = parallel_find_first(n, [&](std::size_t x) {
    for (Elem y = 0; y < n; ++y)
      if (bad(static_cast<Elem>(x), y)) return true;
    return false;
  });
  if (!row) return std::nullopt;
  const Elem x = static_cast<Elem>(*row);
  for (Elem y = 0; y < n; ++y)
    if (bad(x, y)) return std::make_pair(x, y);
  return std::nullopt;
}

bool is_p_abelian(const AbstractGroup& G) { return !p_abelian_counterexample(G); }

std::optional<std::pair<Elem, Elem>> regularity_counterexample(const AbstractGroup& G) {
  const std::size_t n = G.order();
  std::vector<Elem> pw(n);
  for (Elem h = 0; h < n; ++h) pw[h] = power(G, h, G.prime());
  std::map<std::vector<Elem>, Subgroup> cache;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem t = G.multiply(G.inverse(G.multiply(pw[x], pw[y])), pw[G.multiply(x, y)]);
      if (t == G.identity()) continue;
      const Elem pair[] = {x, y};
      Subgroup H = subgroup_closure(G, pair);
      auto it = cache.find(H.elements());
      if (it == cache.end())
        it = cache.emplace(H.elements(), agemo1(commutator_subgroup(H, H))).first;
      if (!it->second.contains(t)) return std::make_pair(x, y);
    }
  return std::nullopt;
}

bool is_regular(const AbstractGroup& G) { return !regularity_counterexample(G); }

Predicates predicates(const AbstractGroup& G) {
  Predicates out;
  const Subgroup whole = whole_group(G);
  out.abelian = is_abelian(whole);
  out.elementary_abelian = is_elementary_abelian(whole);
  out.max_cyclic_order = max_cyclic_order(whole);
  out.cyclic = out.max_cyclic_order == G.order();
  out.p_abelian = is_p_abelian(G);
  out.regular = is_regular(G);
  out.gamma2_elementary_abelian = is_elementary_abelian(commutator_subgroup(whole, whole));
  out.cyclic_subgroup_index_p3 = has_cyclic_subgroup_of_index(G, 3);
  return out;
}

InvariantVector compute_invariants(const AbstractGroup& G) {
  InvariantVector v;
  v.order = G.order();
  const auto lower = lower_central_series(G);
  v.gamma_orders = lower.orders;
  v.nilpotency_class = lower.terms.size() - 1;
  v.coclass = G.order() == 1 ? 0 : log_order(G) - v.nilpotency_class;
  v.z_orders = upper_central_series(G).orders;
  v.center_order = center(G).order();
  v.frattini_order = frattini(G).order();
  v.exponent = subgroup_exponent(whole_group(G));
  v.min_generators = min_generators(G);
  v.flags = predicates(G);
  return v;
}

std::vector<std::pair<std::string, std::string>> invariant_fields(const InvariantVector& v) {
  auto b = [](bool x) { return std::string(x ? "true" : "false"); };
  return {
      {"order", std::to_string(v.order)},
      {"class", std::to_string(v.nilpotency_class)},
      {"coclass", std::to_string(v.coclass)},
      {"center_order", std::to_string(v.center_order)},
      {"gamma_orders", render_orders(v.gamma_orders)},
      {"z_orders", render_orders(v.z_orders)},
      {"frattini_order", std::to_string(v.frattini_order)},
      {"exponent", std::to_string(v.exponent)},
      {"min_generators", std::to_string(v.min_generators)},
      {"abelian", b(v.flags.abelian)},
      {"elementary_abelian", b(v.flags.elementary_abelian)},
      {"cyclic", b(v.flags.cyclic)},
      {"p_abelian", b(v.flags.p_abelian)},
      {"regular", b(v.flags.regular)},
      {"gamma2_elementary_abelian", b(v.flags.gamma2_elementary_abelian)},
      {"cyclic_subgroup_index_p3", b(v.flags.cyclic_subgroup_index_p3)},
      {"max_cyclic_order", std::to_string(v.flags.max_cyclic_order)},
  };
}

std::string render_orders(const std::vector<std::size_t>& orders) {
  std::string out = "[";
  for (std::size_t k = 0; k < orders.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(orders[k]);
  }
  return out + "]";
}

std::string render_subgroup(const Subgroup& H) {
  std::string out = "<";
  for (std::size_t k = 0; k < H.generators().size(); ++k) {
    if (k) out += ", ";
    out += H.ambient().render(H.generators()[k]);
  }
  return out + "> (order " + std::to_string(H.order()) + ")";
}

}  // namespace pgw
