#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgw/group.hpp"
#include "pgw/pcgroup.hpp"
#include "pgw/structure.hpp"

namespace pgw {

/// How much of the homomorphism law to re-verify on construction. Fast
/// checks f(hs) = f(h) f(s) over all h and every generator s, which already
/// implies multiplicativity; Full checks all |G|^2 pairs.
enum class VerifyMode { Fast, Full };

/// Automorphism with its total element map materialized.
class Automorphism {
 public:
  /// Takes ownership of a total element map; throws InvalidAutomorphism if
  /// the map is not bijective or not multiplicative under mode.
  Automorphism(const AbstractGroup& ambient, std::vector<Elem> images,
               VerifyMode mode = VerifyMode::Fast);

  static Automorphism identity(const AbstractGroup& G);

  const AbstractGroup& ambient() const noexcept { return *ambient_; }
  const std::vector<Elem>& images() const noexcept { return images_; }
  std::vector<Elem> generator_images() const;
  Elem apply(Elem h) const { return images_.at(h); }

  bool operator==(const Automorphism& other) const {
    return ambient_ == other.ambient_ && images_ == other.images_;
  }

 private:
  const AbstractGroup* ambient_;
  std::vector<Elem> images_;
};

/// Extends images of G's generators multiplicatively along the Cayley graph.
/// Throws InvalidAutomorphism if the extension is ill-defined or not bijective.
Automorphism extend_generator_images(const AbstractGroup& G, std::span<const Elem> images,
                                     VerifyMode mode = VerifyMode::Fast);

/// For a pc group: checks every power relation, then every commutator
/// relation, against the images (reporting the first violated relation by
/// name), then materializes the map and checks bijectivity.
Automorphism from_generator_images(const GroupCtx& G, const std::vector<Element>& images,
                                   VerifyMode mode = VerifyMode::Fast);

/// True iff f(uv) = f(u) f(v) for every pair.
bool is_multiplicative(const Automorphism& f);

/// (f o g)(h) = f(g(h))
Automorphism compose(const Automorphism& f, const Automorphism& g);
Automorphism inverse(const Automorphism& f);
Automorphism power(const Automorphism& f, std::uint64_t k);
/// lcm of the cycle lengths of the element permutation.
std::uint64_t automorphism_order(const Automorphism& f);

/// h -> y^-1 h y
Automorphism inner_from(const AbstractGroup& G, Elem y);

/// Least y in canonical order with f = inner_from(y), searching one
/// representative per coset of Z(G).
std::optional<Elem> is_inner(const Automorphism& f);

bool fixes_elementwise(const Automorphism& f, const Subgroup& H);

/// "a -> a^1 b^1; b -> b^1; c -> c^1"
std::string render_automorphism(const Automorphism& f);

}  // namespace pgw
