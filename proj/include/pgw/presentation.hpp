#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pgw {

/// Exponents of a normal word g_1^{e_1} ... g_n^{e_n}, each in [0, p).
using ExponentVector = std::vector<std::uint8_t>;

/// One factor g^exp of an arbitrary (not necessarily normal) word.
struct Letter {
  std::size_t gen;
  unsigned exp;
  bool operator==(const Letter&) const = default;
};
using Word = std::vector<Letter>;

/// Power-commutator presentation of a finite p-group in which every
/// generator has relative order p.
///
/// The power relation of g_i is a normal word in g_{i+1}, ..., g_n; the
/// commutator relation [g_j, g_i] (j > i) is a normal word in g_{j+1}, ...,
/// g_n. These shape constraints are what make collection terminate and are
/// enforced on construction. Whether the relations actually define a group
/// of order p^n is a separate question answered by check_consistency.
class PcPresentation {
 public:
  static constexpr unsigned kMaxPrime = 251;

  /// commutators are listed in (j, i) lexicographic order:
  /// (1,0), (2,0), (2,1), (3,0), ...  Throws std::invalid_argument on any
  /// shape violation.
  PcPresentation(std::string name, unsigned prime,
                 std::vector<std::string> generators,
                 std::vector<ExponentVector> powers,
                 std::vector<ExponentVector> commutators);

  /// Presentation with every relation trivial (elementary abelian).
  static PcPresentation elementary_abelian(std::string name, unsigned prime,
                                           std::vector<std::string> generators);

  const std::string& name() const noexcept { return name_; }
  unsigned prime() const noexcept { return prime_; }
  std::size_t rank() const noexcept { return generators_.size(); }
  const std::vector<std::string>& generator_names() const noexcept {
    return generators_;
  }
  std::optional<std::size_t> generator_index(std::string_view name) const;

  /// g_i^p
  const ExponentVector& power(std::size_t i) const { return powers_.at(i); }
  /// [g_j, g_i] for j > i
  const ExponentVector& commutator(std::size_t j, std::size_t i) const;

  const std::vector<ExponentVector>& powers() const noexcept { return powers_; }
  const std::vector<ExponentVector>& commutators() const noexcept {
    return commutators_;
  }

  PcPresentation with_power(std::size_t i, ExponentVector word) const;
  PcPresentation with_commutator(std::size_t j, std::size_t i,
                                 ExponentVector word) const;

  bool operator==(const PcPresentation&) const = default;

  static std::size_t commutator_slot(std::size_t j, std::size_t i) {
    return j * (j - 1) / 2 + i;
  }

 private:
  void validate() const;

  std::string name_;
  unsigned prime_;
  std::vector<std::string> generators_;
  std::vector<ExponentVector> powers_;
  std::vector<ExponentVector> commutators_;
};

bool is_prime(unsigned n);

/// Parses the line-oriented presentation format:
///
///     group <name>
///     prime <p>
///     gens <g1> ... <gn>
///     pow <gi> = <word>
///     comm <gj> <gi> = <word>     (j > i)
///
/// Absent relations default to the identity. Throws ParseError.
PcPresentation parse_presentation(std::string_view text);

/// Canonical text: header, every power relation in generator order, every
/// commutator relation in (j, i) order. Identity words are left empty.
std::string serialize_presentation(const PcPresentation& pres);

/// "a^2 b^1"; the identity renders as "1".
std::string render_word(const PcPresentation& pres, const ExponentVector& exps);

/// Parses an arbitrary word such as "b a" or "a^2 b a^4"; exponents may be
/// any non-negative integer and factors may appear in any order. "1" or the
/// empty string is the identity. Throws ParseError.
Word parse_word(const PcPresentation& pres, std::string_view text);

/// The letters of a normal word, in order.
Word to_word(const ExponentVector& exps);

enum class ConsistencyMode { OverlapTests, FullAssociativity };

struct OverlapFailure {
  std::string test;
  ExponentVector lhs;
  ExponentVector rhs;
};

struct ConsistencyReport {
  bool consistent = true;
  std::vector<OverlapFailure> failures;
  ConsistencyMode method = ConsistencyMode::OverlapTests;
};

std::string_view to_string(ConsistencyMode mode);

/// Overlap mode evaluates the standard test words
///   (g_k g_j) g_i  vs  g_k (g_j g_i)          k > j > i
///   (g_j^p) g_i    vs  g_j^{p-1} (g_j g_i)     j > i
///   (g_j g_i^{p-1}) g_i  vs  g_j (g_i^p)       j > i
///   (g_i^p) g_i    vs  g_i (g_i^p)
/// by collection. Full mode multiplies every pair of normal words and checks
/// (uv)w = u(vw) over all triples for orders up to 3^6, and over all pairs
/// with the middle factor ranging over the generators beyond that.
/// Full mode throws ResourceLimit above max_order.
ConsistencyReport check_consistency(const PcPresentation& pres,
                                    ConsistencyMode mode,
                                    std::size_t max_order = 2187);

}  // namespace pgw
