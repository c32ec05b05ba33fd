#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pgw/group.hpp"

namespace pgw {

/// Explicit subgroup of a fixed ambient group. Elements are kept sorted in
/// canonical order together with a membership bitmap.
class Subgroup {
 public:
  Subgroup(const AbstractGroup& ambient, std::vector<Elem> elements,
           std::vector<Elem> generators);

  const AbstractGroup& ambient() const noexcept { return *ambient_; }
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  const std::vector<Elem>& generators() const noexcept { return generators_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(Elem h) const { return h < member_.size() && member_[h]; }
  bool is_trivial() const noexcept { return elements_.size() == 1; }

  /// Equality of element sets; generating sets may differ.
  bool operator==(const Subgroup& other) const { return elements_ == other.elements_; }
  bool is_subset_of(const Subgroup& other) const;

 private:
  const AbstractGroup* ambient_;
  std::vector<Elem> elements_;
  std::vector<Elem> generators_;
  std::vector<bool> member_;
};

/// Generator test is mathematically sufficient; Full tests every element.
enum class CheckMode { Fast, Full };

Subgroup whole_group(const AbstractGroup& G);
Subgroup trivial_subgroup(const AbstractGroup& G);

/// Least subgroup containing gens. Generators already in the running closure
/// are dropped, so the stored generating set is irredundant in input order.
Subgroup subgroup_closure(const AbstractGroup& G, std::span<const Elem> gens);
/// Least normal subgroup containing gens.
Subgroup normal_closure(const AbstractGroup& G, std::span<const Elem> gens);
/// [A, B], for A and B normalized by each other's commutators (always the
/// case for A = B, or A and B normal in G).
Subgroup commutator_subgroup(const Subgroup& A, const Subgroup& B);
/// Element set {ab : a in A, b in B} as a subgroup; requires AB = BA.
Subgroup product(const Subgroup& A, const Subgroup& B);

Subgroup center(const AbstractGroup& G, CheckMode mode = CheckMode::Fast);
Subgroup centralizer(const AbstractGroup& G, Elem x, CheckMode mode = CheckMode::Fast);
std::vector<Elem> conjugacy_class(const AbstractGroup& G, Elem x);

enum class SeriesKind { LowerCentral, UpperCentral };

struct SeriesReport {
  SeriesKind kind;
  std::vector<Subgroup> terms;
  std::vector<std::size_t> orders;
};

/// gamma_1 = G, gamma_{m+1} = [gamma_m, G], down to the trivial subgroup.
SeriesReport lower_central_series(const AbstractGroup& G);
/// Z_0 = 1, Z_{m+1} = {x : [x, g] in Z_m for every generator g}, up to G.
SeriesReport upper_central_series(const AbstractGroup& G);

/// Frattini subgroup of a p-group, as the closure of p-th powers and gamma_2.
Subgroup frattini(const AbstractGroup& G);

std::uint64_t subgroup_exponent(const Subgroup& H);
Subgroup omega1(const Subgroup& H);
Subgroup agemo1(const Subgroup& H);

/// 0 for the trivial group.
std::size_t nilpotency_class(const AbstractGroup& G);
/// m - cl(G) where |G| = p^m; 0 for the trivial group.
std::size_t coclass(const AbstractGroup& G);
/// d with [G : Phi(G)] = p^d.
std::size_t min_generators(const AbstractGroup& G);
/// m with |G| = p^m.
std::size_t log_order(const AbstractGroup& G);

bool is_abelian(const Subgroup& H);
bool is_elementary_abelian(const Subgroup& H);
bool is_cyclic(const Subgroup& H);
/// Largest |<h>| over h in H.
std::uint64_t max_cyclic_order(const Subgroup& H);
/// Whether G has a cyclic subgroup of index exactly p^k.
bool has_cyclic_subgroup_of_index(const AbstractGroup& G, unsigned k);

/// (xy)^p = x^p y^p for all x, y.
bool is_p_abelian(const AbstractGroup& G);
/// A pair (x, y) violating the p-abelian law, least in canonical order.
std::optional<std::pair<Elem, Elem>> p_abelian_counterexample(const AbstractGroup& G);

/// Regular: for all x, y the element (x^p y^p)^-1 (xy)^p lies in
/// agemo1(gamma_2(<x, y>)). Returns the least violating pair.
std::optional<std::pair<Elem, Elem>> regularity_counterexample(const AbstractGroup& G);
bool is_regular(const AbstractGroup& G);

struct Predicates {
  bool abelian = false;
  bool elementary_abelian = false;
  bool cyclic = false;
  bool p_abelian = false;
  bool regular = false;
  bool gamma2_elementary_abelian = false;
  bool cyclic_subgroup_index_p3 = false;
  std::uint64_t max_cyclic_order = 1;

  bool operator==(const Predicates&) const = default;
};

Predicates predicates(const AbstractGroup& G);

/// The invariant vector compared across backends.
struct InvariantVector {
  std::size_t order = 1;
  std::size_t nilpotency_class = 0;
  std::size_t coclass = 0;
  std::size_t center_order = 1;
  std::vector<std::size_t> gamma_orders;
  std::vector<std::size_t> z_orders;
  std::size_t frattini_order = 1;
  std::uint64_t exponent = 1;
  std::size_t min_generators = 0;
  Predicates flags;

  bool operator==(const InvariantVector&) const = default;
};

InvariantVector compute_invariants(const AbstractGroup& G);

/// (field, rendered value) pairs in a fixed order; the comparison surface
/// for cross-backend checks and committed expectations.
std::vector<std::pair<std::string, std::string>> invariant_fields(const InvariantVector& v);

std::string render_orders(const std::vector<std::size_t>& orders);
/// "<a^1, b^1> (order 9)"
std::string render_subgroup(const Subgroup& H);

}  // namespace pgw
