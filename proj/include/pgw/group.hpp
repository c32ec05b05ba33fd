#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pgw {

/// Index of an element in its group's canonical order. Index 0 is always the
/// identity, and "least element" tie-breaks everywhere mean least index.
using Elem = std::uint32_t;

/// Behavioral contract shared by the collection backend and the table-backed
/// permutation backend. Implementations are immutable and safe to share
/// across threads.
class AbstractGroup {
 public:
  virtual ~AbstractGroup() = default;

  virtual std::size_t order() const = 0;
  /// The prime p with order() = p^m; 0 for a trivial group of unknown prime.
  virtual unsigned prime() const = 0;
  virtual Elem multiply(Elem u, Elem v) const = 0;
  virtual Elem inverse(Elem u) const = 0;
  virtual const std::vector<Elem>& generators() const = 0;
  virtual std::string generator_name(std::size_t i) const = 0;
  virtual std::string render(Elem u) const = 0;

  Elem identity() const noexcept { return 0; }
};

/// Square-and-multiply; negative k powers the inverse.
Elem power(const AbstractGroup& G, Elem h, long long k);
/// [u, v] = u^-1 v^-1 u v
Elem commutator(const AbstractGroup& G, Elem u, Elem v);
/// y^-1 h y
Elem conjugate(const AbstractGroup& G, Elem h, Elem y);
/// Least k >= 1 with h^k = e.
std::uint64_t element_order(const AbstractGroup& G, Elem h);

/// Process-wide default enumeration cap (3^7 unless PGW_MAX_ORDER is set).
std::size_t default_max_order();
void set_default_max_order(std::size_t cap);

}  // namespace pgw
