#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pgw/presentation.hpp"

namespace pgw {

/// Collection from the left over a shape-valid presentation.
///
/// Works whether or not the presentation is consistent: the result is the
/// normal word reached by the rewriting rules
///   g_j g_i -> g_i g_j [g_j, g_i]   (j > i)
///   g_i^p   -> power relation of g_i
/// applied to the leftmost violation. For a consistent presentation this is
/// the unique normal form.
class Collector {
 public:
  explicit Collector(const PcPresentation& pres);

  std::size_t rank() const noexcept { return rank_; }
  unsigned prime() const noexcept { return prime_; }

  /// Replaces acc by the normal form of acc * w and returns the number of
  /// letters processed.
  std::size_t collect_into(ExponentVector& acc, const Word& w) const;
  std::size_t collect_into(ExponentVector& acc, const ExponentVector& normal) const;

  ExponentVector collect(const Word& w) const;
  ExponentVector multiply(const ExponentVector& u, const ExponentVector& v) const;

 private:
  using Letters = std::vector<std::uint16_t>;

  std::size_t run(ExponentVector& acc, Letters& stack) const;

  std::size_t rank_;
  unsigned prime_;
  std::vector<Letters> power_letters_;
  // conjugate_letters_[slot(j, i)] spells g_j [g_j, g_i] = g_i^{-1} g_j g_i.
  std::vector<Letters> conjugate_letters_;
};

}  // namespace pgw
