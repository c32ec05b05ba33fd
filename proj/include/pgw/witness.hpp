#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgw/automorphism.hpp"
#include "pgw/group.hpp"
#include "pgw/oracle.hpp"
#include "pgw/structure.hpp"

namespace pgw {

/// Input to the construction: a non-central x of order p with [x, G] central
/// of order p, its centralizer M (of index p), an element g outside M, and
/// c = [x, g].
struct WitnessData {
  Elem x;
  Subgroup M;
  Elem g;
  Elem c;
};

/// x is not central, x^p = e, [x, s] is central for every generator s, and
/// the subgroup generated by {[x, h] : h in G} has order p.
bool is_admissible(const AbstractGroup& G, const Subgroup& Z, Elem x);
/// Every admissible element, ascending.
std::vector<Elem> admissible_elements(const AbstractGroup& G);

/// Least admissible x; M = C_G(x); g = least element outside M; c = [x, g].
std::optional<WitnessData> find_admissible_witness(const AbstractGroup& G);
/// Witness with an explicit choice of x and g; M = C_G(x), c = [x, g].
/// Throws PreconditionError if the choice is not a valid witness.
WitnessData make_witness(const AbstractGroup& G, Elem x, Elem g);

/// Walks admissible pairs (x, g), x ascending and then g ascending outside
/// C_G(x), and stops at the first pair whose beta is non-inner.
struct WitnessScan {
  std::optional<WitnessData> first;
  std::optional<WitnessData> non_inner;
  std::size_t admissible_count = 0;
  std::size_t pairs_tried = 0;
};
WitnessScan scan_witnesses(const AbstractGroup& G);

/// Throws PreconditionError naming the first violated witness invariant.
void validate_witness(const AbstractGroup& G, const WitnessData& w);

/// (gx)^p = g^p by direct powering, with x^p = e and [x,g]^{p(p-1)/2} = e.
bool power_identity_holds(const AbstractGroup& G, Elem x, Elem g);
/// power_identity_holds for a validated witness; throws PreconditionError if
/// w is not a valid witness.
bool check_power_identity(const AbstractGroup& G, const WitnessData& w);

/// Coset decomposition h = m g^i with m in M and 0 <= i < p.
struct CosetDecomposition {
  Elem m;
  unsigned i;
};
CosetDecomposition decompose(const AbstractGroup& G, const WitnessData& w, Elem h);

/// The automorphism fixing M pointwise and sending g to gx, extended by
/// m g^i -> m (gx)^i. Throws VerificationFailure if any guaranteed property
/// (homomorphism, M fixed, beta(g) = gx, order p, Frattini fixed) fails.
Automorphism construct_beta(const AbstractGroup& G, const WitnessData& w,
                            VerifyMode mode = VerifyMode::Fast);

struct VerificationReport {
  std::uint64_t order = 0;
  bool order_is_p = false;
  bool non_inner = false;
  std::optional<Elem> inner_witness;
  bool fixes_frattini = false;
  std::optional<bool> power_identity_holds;
  std::optional<WitnessData> witness;
  std::vector<std::string> notes;

  bool all_green() const {
    return order_is_p && non_inner && fixes_frattini && power_identity_holds.value_or(true);
  }
};

/// Recomputes order, innerness and Frattini fixing from scratch.
VerificationReport verify_noninner_orderp(const AbstractGroup& G, const Automorphism& f,
                                          const std::optional<WitnessData>& witness = std::nullopt);

/// Which hypothesis families the group satisfies.
struct HypothesisFlags {
  /// class n >= 2, exp(gamma_{n-1}) = p and |gamma_n| = p
  bool penultimate_exponent_p = false;
  /// non-abelian of coclass 2
  bool coclass_two = false;
  /// class n >= 3, gamma_2 elementary abelian and |gamma_n| = p
  bool elementary_abelian_derived = false;
  /// non-abelian p-abelian with |gamma_n| = p
  bool p_abelian_last_term_p = false;
  /// non-abelian, |G| >= p^4, cyclic subgroup of index p^3
  bool cyclic_index_p3 = false;
};

enum class CyclicIndexBranch { None, Regular, Irregular };

struct HypothesisReport {
  unsigned prime = 0;
  std::size_t order = 1;
  std::size_t class_n = 0;
  std::vector<std::size_t> gamma_orders;
  std::vector<std::size_t> z_orders;
  std::uint64_t exp_gamma_n_minus_1 = 1;
  std::size_t gamma_n_order = 1;
  std::size_t coclass = 0;
  std::size_t center_order = 1;
  bool abelian = true;
  bool p_abelian = true;
  bool regular = true;
  bool gamma2_elementary_abelian = true;
  bool z2_mod_z_cyclic = false;
  HypothesisFlags flags;
  CyclicIndexBranch cyclic_index_branch = CyclicIndexBranch::None;
  /// For the irregular branch: p = 3, gamma_3 elementary abelian, |gamma_2| <= 27.
  std::optional<bool> irregular_facts_hold;
  /// Citation tag of the external result covering the group when the
  /// penultimate-exponent hypotheses fail.
  std::optional<std::string> delegation;
};

HypothesisReport classify_hypotheses(const AbstractGroup& G);

/// For a p-abelian G: [x^p, y] = e and [a, b]^p = e for all pairs, and
/// exp(gamma_2) divides p. Throws PreconditionError if G is not p-abelian.
bool verify_p_abelian_chain(const AbstractGroup& G);

enum class OutcomeKind { OutOfScope, Constructed, Delegated, OracleFound, OracleNone, Undetermined };

std::string_view to_string(OutcomeKind kind);
std::string_view to_string(CyclicIndexBranch branch);

struct Outcome {
  OutcomeKind kind = OutcomeKind::Undetermined;
  HypothesisReport hypotheses;
  std::optional<WitnessData> witness;
  std::optional<Automorphism> beta;
  std::optional<VerificationReport> verification;
  std::optional<std::string> citation;
  /// Set when the fallback search ran: whether it found a non-inner
  /// automorphism of order p fixing the Frattini subgroup.
  std::optional<bool> oracle_confirmed;
  std::optional<Automorphism> oracle_automorphism;
  std::vector<std::string> notes;
};

/// Abelian -> out of scope; a witness pair with non-inner beta -> constructed
/// and verified; else (including when every admissible pair yields an inner
/// beta, which is recorded in notes and verification) a
/// delegation tag if one applies (confirmed by exhaustive search when
/// fallback is set); else the exhaustive search result when fallback is set;
/// else undetermined.
Outcome conjecture_pipeline(const AbstractGroup& G, bool fallback,
                            const SearchLimits& limits = {});

}  // namespace pgw
