#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pgw/automorphism.hpp"
#include "pgw/group.hpp"
#include "pgw/pcgroup.hpp"
#include "pgw/structure.hpp"

namespace pgw {

/// Images of the points 0 .. degree-1.
using Permutation = std::vector<std::uint16_t>;

struct PermSource {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

/// Parses
///
///     permgroup <name>
///     degree <d>
///     gen (1 4 7)(2 5 8)(3 6 9)
///
/// with 1-based points in disjoint cycle notation. Throws ParseError.
PermSource parse_perm_source(std::string_view text);

/// Permutation group enumerated by closure, with elements sorted by their
/// image lists (so the identity comes first). Products compose left to
/// right: i^(uv) = (i^u)^v.
class PermGroup final : public AbstractGroup {
 public:
  static constexpr std::size_t kTableLimit = 2187;

  /// Throws ResourceLimit above max_order and PreconditionError unless the
  /// order is a power of an odd prime.
  static PermGroup from_generators(std::string name, std::size_t degree,
                                   const std::vector<Permutation>& gens,
                                   std::size_t max_order = default_max_order());
  static PermGroup from_source(const PermSource& src,
                               std::size_t max_order = default_max_order());

  const std::string& name() const noexcept { return name_; }
  std::size_t degree() const noexcept { return degree_; }
  const Permutation& permutation(Elem h) const { return elements_.at(h); }
  std::optional<Elem> index_of(const Permutation& perm) const;

  std::size_t order() const override { return elements_.size(); }
  unsigned prime() const override { return prime_; }
  Elem multiply(Elem u, Elem v) const override;
  Elem inverse(Elem u) const override { return inverses_[u]; }
  const std::vector<Elem>& generators() const override { return generators_; }
  std::string generator_name(std::size_t i) const override { return "g" + std::to_string(i + 1); }
  std::string render(Elem u) const override;

 private:
  PermGroup() = default;

  struct PermHash {
    std::size_t operator()(const Permutation& p) const noexcept;
  };

  std::string name_;
  std::size_t degree_ = 0;
  unsigned prime_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Elem, PermHash> index_;
  std::vector<Elem> table_;
  std::vector<Elem> inverses_;
  std::vector<Elem> generators_;
};

PermGroup perm_group_from_generators(std::string name, std::size_t degree,
                                     const std::vector<Permutation>& gens,
                                     std::size_t max_order = default_max_order());

/// Structure quantities recomputed by naive definitional code: the center by
/// testing every pair, gamma_{m+1} from all commutators with all elements,
/// Z_{m+1} by testing every element, Phi as the intersection of the kernels
/// of all homomorphisms onto C_p.
struct OracleSnapshot {
  InvariantVector invariants;
  std::size_t maximal_subgroup_count = 0;
  std::size_t frattini_via_maximal = 1;
  std::size_t frattini_via_powers_and_commutators = 1;
  bool frattini_routes_agree = true;
};

OracleSnapshot oracle_recompute(const AbstractGroup& G);

/// Oracle-side Frattini subgroup (intersection of maximal subgroups).
Subgroup oracle_frattini(const AbstractGroup& G);
/// Oracle-side innerness: some y with y^-1 h y = f(h) for all h.
bool oracle_is_inner(const Automorphism& f);

struct SearchLimits {
  std::size_t max_order = 243;
  std::size_t max_generators = 3;
};

struct SearchStats {
  std::size_t nodes = 0;
  std::size_t automorphisms = 0;
};

/// First non-inner automorphism of order exactly p (fixing Phi(G) elementwise
/// when required) in canonical enumeration order of generator-image tuples
/// over a minimal generating set. Throws ResourceLimit beyond limits.
std::optional<Automorphism> exhaustive_noninner_search(const AbstractGroup& G,
                                                       bool require_fix_frattini,
                                                       const SearchLimits& limits = {},
                                                       SearchStats* stats = nullptr);

/// Every automorphism of G, by the same search without order or innerness
/// filters. Intended for tiny groups.
std::vector<Automorphism> all_automorphisms(const AbstractGroup& G,
                                            const SearchLimits& limits = {});

struct FieldComparison {
  std::string field;
  std::string pc_value;
  std::string perm_value;
  bool equal = false;
};

struct CrossValidationReport {
  std::vector<FieldComparison> fields;
  bool all_equal = false;
};

/// Invariant vector of the pc group (structure module on the collection
/// backend) against the oracle recomputation on the permutation backend.
CrossValidationReport cross_validate(const GroupCtx& pc, const PermGroup& perm);
CrossValidationReport compare_invariants(const InvariantVector& pc, const InvariantVector& perm);

}  // namespace pgw
