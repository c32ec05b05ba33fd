#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pgw/collector.hpp"
#include "pgw/group.hpp"
#include "pgw/presentation.hpp"

namespace pgw {

/// A normal word, stored as its exponent vector. Ordering is lexicographic on
/// the vector, which is the canonical element order.
struct Element {
  ExponentVector exponents;

  auto operator<=>(const Element&) const = default;
};

/// Collection-backed arithmetic for a consistent pc presentation.
///
/// The canonical index of g_1^{e_1} ... g_n^{e_n} is the base-p number
/// e_1 e_2 ... e_n, so index order and lexicographic vector order agree.
class GroupCtx final : public AbstractGroup {
 public:
  /// Runs the overlap consistency tests; throws InconsistentPresentation if
  /// they fail and ResourceLimit if p^rank exceeds max_order.
  static GroupCtx create(PcPresentation pres, std::size_t max_order = default_max_order());

  const PcPresentation& presentation() const noexcept { return pres_; }
  const Collector& collector() const noexcept { return collector_; }
  std::size_t rank() const noexcept { return pres_.rank(); }

  Element identity_element() const { return Element{ExponentVector(rank(), 0)}; }
  Element generator(std::size_t i) const;

  Element collect(const Word& w) const;
  /// Collects the number of letters processed into *steps.
  Element collect(const Word& w, std::size_t* steps) const;
  Element multiply(const Element& u, const Element& v) const;
  Element inverse(const Element& h) const;
  Element power(const Element& h, long long k) const;
  Element commutator(const Element& u, const Element& v) const;
  std::uint64_t element_order(const Element& h) const;
  /// All p^rank normal words in ascending lexicographic order.
  std::vector<Element> enumerate_elements() const;

  Elem index_of(const Element& h) const;
  Element element_at(Elem idx) const;
  Element parse_element(std::string_view word) const;
  std::string render(const Element& h) const;

  std::size_t order() const override { return order_; }
  unsigned prime() const override { return pres_.prime(); }
  Elem multiply(Elem u, Elem v) const override;
  Elem inverse(Elem u) const override;
  const std::vector<Elem>& generators() const override { return generator_indices_; }
  std::string generator_name(std::size_t i) const override;
  std::string render(Elem u) const override;

 private:
  GroupCtx(PcPresentation pres, std::size_t order);
  void check_rank(const Element& h) const;

  PcPresentation pres_;
  Collector collector_;
  std::size_t order_;
  std::vector<Elem> generator_indices_;
};

}  // namespace pgw
