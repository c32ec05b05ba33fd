#include "pgw/witness.hpp"

#include <algorithm>

#include "pgw/errors.hpp"

namespace pgw {

bool is_admissible(const AbstractGroup& G, const Subgroup& Z, Elem x) {
  if (Z.contains(x)) return false;
  if (power(G, x, G.prime()) != G.identity()) return false;
  for (Elem s : G.generators())
    if (!Z.contains(commutator(G, x, s))) return false;
  std::vector<Elem> comms;
  for (Elem h = 0; h < G.order(); ++h) comms.push_back(commutator(G, x, h));
  return subgroup_closure(G, comms).order() == G.prime();
}

std::vector<Elem> admissible_elements(const AbstractGroup& G) {
  const Subgroup Z = center(G);
  std::vector<Elem> out;
  for (Elem x = 0; x < G.order(); ++x)
    if (is_admissible(G, Z, x)) out.push_back(x);
  return out;
}

std::optional<WitnessData> find_admissible_witness(const AbstractGroup& G) {
  const Subgroup Z = center(G);
  for (Elem x = 0; x < G.order(); ++x) {
    if (!is_admissible(G, Z, x)) continue;
    Subgroup M = centralizer(G, x);
    if (M.order() * G.prime() != G.order())
      throw VerificationFailure("centralizer of an admissible element does not have index p");
    Elem g = 0;
    while (M.contains(g)) ++g;
    const Elem c = commutator(G, x, g);
    return WitnessData{x, std::move(M), g, c};
  }
  return std::nullopt;
}

WitnessData make_witness(const AbstractGroup& G, Elem x, Elem g) {
  WitnessData w{x, centralizer(G, x), g, commutator(G, x, g)};
  validate_witness(G, w);
  return w;
}

WitnessScan scan_witnesses(const AbstractGroup& G) {
  WitnessScan out;
  for (Elem x : admissible_elements(G)) {
    ++out.admissible_count;
    Subgroup M = centralizer(G, x);
    if (M.order() * G.prime() != G.order())
      throw VerificationFailure("centralizer of an admissible element does not have index p");
    for (Elem g = 0; g < G.order(); ++g) {
      if (M.contains(g)) continue;
      WitnessData w{x, M, g, commutator(G, x, g)};
      ++out.pairs_tried;
      Automorphism beta = construct_beta(G, w);
      if (!out.first) out.first = w;
      if (!is_inner(beta)) {
        out.non_inner = std::move(w);
        return out;
      }
    }
  }
  return out;
}

void validate_witness(const AbstractGroup& G, const WitnessData& w) {
  const unsigned p = G.prime();
  const Subgroup Z = center(G);
  auto require = [](bool ok, const char* what) {
    if (!ok) throw PreconditionError(std::string("invalid witness: ") + what);
  };
  require(&w.M.ambient() == &G, "centralizer belongs to another group");
  require(!Z.contains(w.x), "x is central");
  require(power(G, w.x, p) == G.identity(), "x^p != e");
  require(is_admissible(G, Z, w.x), "[x, G] is not central of order p");
  require(w.M == centralizer(G, w.x), "M is not the centralizer of x");
  require(w.M.order() * p == G.order(), "M does not have index p");
  require(!w.M.contains(w.g), "g lies in M");
  require(w.c == commutator(G, w.x, w.g), "c != [x, g]");
  require(w.c != G.identity(), "c is trivial");
  require(power(G, w.c, p) == G.identity(), "c^p != e");
  require(Z.contains(w.c), "c is not central");
}

bool power_identity_holds(const AbstractGroup& G, Elem x, Elem g) {
  const unsigned p = G.prime();
  const Elem c = commutator(G, x, g);
  const long long triangular = static_cast<long long>(p) * (p - 1) / 2;
  return power(G, x, p) == G.identity() && power(G, c, triangular) == G.identity() &&
         power(G, G.multiply(g, x), p) == power(G, g, p);
}

bool check_power_identity(const AbstractGroup& G, const WitnessData& w) {
  validate_witness(G, w);
  return power_identity_holds(G, w.x, w.g);
}

CosetDecomposition decompose(const AbstractGroup& G, const WitnessData& w, Elem h) {
  const unsigned p = G.prime();
  const Elem ginv = G.inverse(w.g);
  std::optional<CosetDecomposition> found;
  Elem m = h;
  for (unsigned i = 0; i < p; ++i, m = G.multiply(m, ginv)) {
    if (!w.M.contains(m)) continue;
    if (found) throw VerificationFailure("coset exponent is not unique");
    found = CosetDecomposition{m, i};
  }
  if (!found) throw VerificationFailure("element " + G.render(h) + " has no decomposition m g^i");
  return *found;
}

Automorphism construct_beta(const AbstractGroup& G, const WitnessData& w, VerifyMode mode) {
  const unsigned p = G.prime();
  const Elem gx = G.multiply(w.g, w.x);
  std::vector<Elem> gx_powers{G.identity()};
  for (unsigned i = 1; i < p; ++i) gx_powers.push_back(G.multiply(gx_powers.back(), gx));

  std::vector<Elem> map(G.order());
  for (Elem h = 0; h < G.order(); ++h) {
    const auto [m, i] = decompose(G, w, h);
    map[h] = G.multiply(m, gx_powers[i]);
  }

  std::optional<Automorphism> beta;
  try {
    beta.emplace(G, std::move(map), mode);
  } catch (const InvalidAutomorphism& e) {
    throw VerificationFailure(std::string("beta is not an automorphism: ") + e.what());
  }
  if (!fixes_elementwise(*beta, w.M)) throw VerificationFailure("beta does not fix M");
  if (beta->apply(w.g) != gx) throw VerificationFailure("beta(g) != gx");
  if (automorphism_order(*beta) != p) throw VerificationFailure("beta does not have order p");
  if (!fixes_elementwise(*beta, frattini(G))) throw VerificationFailure("beta does not fix Phi(G)");
  return std::move(*beta);
}

VerificationReport verify_noninner_orderp(const AbstractGroup& G, const Automorphism& f,
                                          const std::optional<WitnessData>& witness) {
  VerificationReport r;
  r.order = automorphism_order(f);
  r.order_is_p = G.prime() != 0 && r.order == G.prime();
  r.inner_witness = is_inner(f);
  r.non_inner = !r.inner_witness.has_value();
  r.fixes_frattini = fixes_elementwise(f, frattini(G));
  if (witness) {
    r.witness = witness;
    r.power_identity_holds = power_identity_holds(G, witness->x, witness->g);
  }
  if (!r.order_is_p) r.notes.push_back("order " + std::to_string(r.order) + " is not p");
  if (r.inner_witness) r.notes.push_back("inner: conjugation by " + G.render(*r.inner_witness));
  if (!r.fixes_frattini) r.notes.push_back("moves an element of the Frattini subgroup");
  return r;
}

namespace {

bool z2_over_z_cyclic(const AbstractGroup& G, const SeriesReport& upper) {
  if (upper.terms.size() < 3) return upper.terms.size() == 2;  // Z2 = Z or G = Z
  const Subgroup& Z = upper.terms[1];
  const Subgroup& Z2 = upper.terms[2];
  for (Elem x : Z2.elements()) {
    const Elem one[] = {x};
    const Subgroup X = subgroup_closure(G, one);
    if (product(X, Z) == Z2) return true;
  }
  return false;
}

}  // namespace

HypothesisReport classify_hypotheses(const AbstractGroup& G) {
  HypothesisReport r;
  const unsigned p = G.prime();
  if (G.order() > 1 && p % 2 == 0) throw PreconditionError("the prime must be odd");
  r.prime = p;
  r.order = G.order();

  const auto lower = lower_central_series(G);
  const auto upper = upper_central_series(G);
  const Subgroup whole = whole_group(G);
  r.gamma_orders = lower.orders;
  r.z_orders = upper.orders;
  r.class_n = lower.terms.size() - 1;
  r.coclass = coclass(G);
  r.center_order = upper.terms.size() > 1 ? upper.terms[1].order() : 1;
  r.abelian = r.class_n <= 1;
  r.p_abelian = is_p_abelian(G);
  r.regular = is_regular(G);
  const Subgroup& gamma2 = lower.terms.size() > 1 ? lower.terms[1] : lower.terms[0];
  r.gamma2_elementary_abelian = is_elementary_abelian(gamma2);
  r.z2_mod_z_cyclic = z2_over_z_cyclic(G, upper);

  const std::size_t n = r.class_n;
  if (n >= 1) {
    // gamma_{n-1} is G itself for class 1 and 2.
    r.exp_gamma_n_minus_1 = subgroup_exponent(lower.terms[n >= 2 ? n - 2 : 0]);
    r.gamma_n_order = lower.terms[n - 1].order();
  }

  if (!r.abelian) {
    auto& f = r.flags;
    f.penultimate_exponent_p = r.exp_gamma_n_minus_1 == p && r.gamma_n_order == p;
    f.coclass_two = r.coclass == 2;
    f.elementary_abelian_derived = n >= 3 && r.gamma2_elementary_abelian && r.gamma_n_order == p;
    f.p_abelian_last_term_p = r.p_abelian && r.gamma_n_order == p;
    const std::size_t p4 = static_cast<std::size_t>(p) * p * p * p;
    f.cyclic_index_p3 = G.order() >= p4 && has_cyclic_subgroup_of_index(G, 3);

    if (f.cyclic_index_p3) {
      r.cyclic_index_branch = r.regular ? CyclicIndexBranch::Regular : CyclicIndexBranch::Irregular;
      if (!r.regular) {
        const bool gamma3_ea = lower.terms.size() <= 2 || is_elementary_abelian(lower.terms[2]);
        r.irregular_facts_hold = p == 3 && gamma3_ea && gamma2.order() <= 27;
      }
    }

    if (!f.penultimate_exponent_p) {
      if (n == 2)
        r.delegation = "liebeck";
      else if (n == 3)
        r.delegation = "abdollahi-class-3";
      else if (f.coclass_two && r.z2_mod_z_cyclic)
        r.delegation = "attar";
      else if (r.regular)
        r.delegation = "schmid";
    }
  }
  return r;
}

bool verify_p_abelian_chain(const AbstractGroup& G) {
  if (!is_p_abelian(G)) throw PreconditionError("group is not p-abelian");
  const unsigned p = G.prime();
  const std::size_t n = G.order();
  std::vector<Elem> pw(n);
  for (Elem h = 0; h < n; ++h) pw[h] = power(G, h, p);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (commutator(G, pw[x], y) != G.identity()) return false;
      if (power(G, commutator(G, x, y), p) != G.identity()) return false;
    }
  const Subgroup whole = whole_group(G);
  const auto e = subgroup_exponent(commutator_subgroup(whole, whole));
  return e == 1 || e == p;
}

std::string_view to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::OutOfScope: return "out-of-scope";
    case OutcomeKind::Constructed: return "constructed";
    case OutcomeKind::Delegated: return "delegated";
    case OutcomeKind::OracleFound: return "oracle-found";
    case OutcomeKind::OracleNone: return "oracle-none";
    case OutcomeKind::Undetermined: return "undetermined";
  }
  return "undetermined";
}

std::string_view to_string(CyclicIndexBranch branch) {
  switch (branch) {
    case CyclicIndexBranch::None: return "none";
    case CyclicIndexBranch::Regular: return "regular";
    case CyclicIndexBranch::Irregular: return "irregular";
  }
  return "none";
}

Outcome conjecture_pipeline(const AbstractGroup& G, bool fallback, const SearchLimits& limits) {
  Outcome out;
  out.hypotheses = classify_hypotheses(G);
  if (out.hypotheses.abelian) {
    out.kind = OutcomeKind::OutOfScope;
    return out;
  }

  WitnessScan scan = scan_witnesses(G);
  if (scan.non_inner) {
    Automorphism beta = construct_beta(G, *scan.non_inner);
    out.verification = verify_noninner_orderp(G, beta, scan.non_inner);
    out.witness = std::move(scan.non_inner);
    out.beta.emplace(std::move(beta));
    out.kind = OutcomeKind::Constructed;
    return out;
  }
  if (scan.first) {
    Automorphism beta = construct_beta(G, *scan.first);
    out.verification = verify_noninner_orderp(G, beta, scan.first);
    out.witness = std::move(scan.first);
    out.beta.emplace(std::move(beta));
    out.notes.push_back("all " + std::to_string(scan.pairs_tried) + " admissible pairs (x, g) over " +
                        std::to_string(scan.admissible_count) +
                        " admissible elements yield inner automorphisms");
  }

  auto search = [&] {
    auto found = exhaustive_noninner_search(G, true, limits);
    out.oracle_confirmed = found.has_value();
    if (found) out.oracle_automorphism.emplace(std::move(*found));
  };

  if (out.hypotheses.delegation) {
    out.kind = OutcomeKind::Delegated;
    out.citation = out.hypotheses.delegation;
    if (fallback) search();
    return out;
  }
  if (fallback) {
    search();
    out.kind = *out.oracle_confirmed ? OutcomeKind::OracleFound : OutcomeKind::OracleNone;
    return out;
  }
  out.kind = OutcomeKind::Undetermined;
  return out;
}

}  // namespace pgw
