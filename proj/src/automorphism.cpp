#include "pgw/automorphism.hpp"

#include <deque>
#include <numeric>

#include "pgw/errors.hpp"
#include "pgw/parallel.hpp"

namespace pgw {

namespace {

void verify_map(const AbstractGroup& G, const std::vector<Elem>& images, VerifyMode mode) {
  const std::size_t n = G.order();
  if (images.size() != n) throw InvalidAutomorphism("element map has wrong size");
  std::vector<bool> hit(n, false);
  for (Elem img : images) {
    if (img >= n) throw InvalidAutomorphism("element map leaves the group");
    if (hit[img]) throw InvalidAutomorphism("map is not bijective");
    hit[img] = true;
  }
  if (images[G.identity()] != G.identity()) throw InvalidAutomorphism("identity is not fixed");
  if (mode == VerifyMode::Fast) {
    for (Elem h = 0; h < n; ++h)
      for (Elem s : G.generators())
        if (images[G.multiply(h, s)] != G.multiply(images[h], images[s]))
          throw InvalidAutomorphism("map is not multiplicative at (" + G.render(h) + ") * (" +
                                    G.render(s) + ")");
  } else {
    for (Elem u = 0; u < n; ++u)
      for (Elem v = 0; v < n; ++v)
        if (images[G.multiply(u, v)] != G.multiply(images[u], images[v]))
          throw InvalidAutomorphism("map is not multiplicative at (" + G.render(u) + ") * (" +
                                    G.render(v) + ")");
  }
}

}  // namespace

Automorphism::Automorphism(const AbstractGroup& ambient, std::vector<Elem> images,
                           VerifyMode mode)
    : ambient_(&ambient), images_(std::move(images)) {
  verify_map(*ambient_, images_, mode);
}

Automorphism Automorphism::identity(const AbstractGroup& G) {
  std::vector<Elem> id(G.order());
  std::iota(id.begin(), id.end(), Elem{0});
  return Automorphism(G, std::move(id));
}

std::vector<Elem> Automorphism::generator_images() const {
  std::vector<Elem> out;
  for (Elem s : ambient_->generators()) out.push_back(images_[s]);
  return out;
}

Automorphism extend_generator_images(const AbstractGroup& G, std::span<const Elem> images,
                                     VerifyMode mode) {
  const auto& gens = G.generators();
  if (images.size() != gens.size())
    throw InvalidAutomorphism("expected one image per generator");
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> map(G.order(), kUnset);
  map[G.identity()] = G.identity();
  std::deque<Elem> queue{G.identity()};
  while (!queue.empty()) {
    Elem h = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Elem hs = G.multiply(h, gens[k]);
      Elem img = G.multiply(map[h], images[k]);
      if (map[hs] == kUnset) {
        map[hs] = img;
        queue.push_back(hs);
      } else if (map[hs] != img) {
        throw InvalidAutomorphism("generator images do not extend to a homomorphism");
      }
    }
  }
  for (Elem img : map)
    if (img == kUnset) throw InvalidAutomorphism("generators do not generate the group");
  return Automorphism(G, std::move(map), mode);
}

Automorphism from_generator_images(const GroupCtx& G, const std::vector<Element>& images,
                                   VerifyMode mode) {
  const auto& pres = G.presentation();
  const std::size_t n = pres.rank();
  if (images.size() != n) throw InvalidAutomorphism("expected one image per pc generator");

  // Image of a normal word: product of image powers in generator order.
  auto eval = [&](const ExponentVector& w) {
    Element out = G.identity_element();
    for (std::size_t k = 0; k < n; ++k)
      if (w[k] != 0) out = G.multiply(out, G.power(images[k], w[k]));
    return out;
  };
  const auto& names = pres.generator_names();
  for (std::size_t i = 0; i < n; ++i)
    if (G.power(images[i], pres.prime()) != eval(pres.power(i)))
      throw InvalidAutomorphism("relation not preserved: pow " + names[i] + " = " +
                                render_word(pres, pres.power(i)));
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (G.commutator(images[j], images[i]) != eval(pres.commutator(j, i)))
        throw InvalidAutomorphism("relation not preserved: comm " + names[j] + " " + names[i] +
                                  " = " + render_word(pres, pres.commutator(j, i)));

  std::vector<Elem> map(G.order());
  for (Elem h = 0; h < G.order(); ++h) map[h] = G.index_of(eval(G.element_at(h).exponents));
  std::vector<bool> hit(G.order(), false);
  for (Elem img : map) {
    if (hit[img]) throw InvalidAutomorphism("map is not bijective");
    hit[img] = true;
  }
  return Automorphism(G, std::move(map), mode);
}

bool is_multiplicative(const Automorphism& f) {
  const auto& G = f.ambient();
  for (Elem u = 0; u < G.order(); ++u)
    for (Elem v = 0; v < G.order(); ++v)
      if (f.apply(G.multiply(u, v)) != G.multiply(f.apply(u), f.apply(v))) return false;
  return true;
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  if (&f.ambient() != &g.ambient()) throw std::invalid_argument("ambient mismatch in compose");
  std::vector<Elem> map(g.images().size());
  for (std::size_t h = 0; h < map.size(); ++h) map[h] = f.apply(g.apply(static_cast<Elem>(h)));
  return Automorphism(f.ambient(), std::move(map));
}

Automorphism inverse(const Automorphism& f) {
  std::vector<Elem> map(f.images().size());
  for (std::size_t h = 0; h < map.size(); ++h) map[f.images()[h]] = static_cast<Elem>(h);
  return Automorphism(f.ambient(), std::move(map));
}

Automorphism power(const Automorphism& f, std::uint64_t k) {
  Automorphism result = Automorphism::identity(f.ambient());
  for (std::uint64_t r = 0; r < k; ++r) result = compose(f, result);
  return result;
}

std::uint64_t automorphism_order(const Automorphism& f) {
  const auto& img = f.images();
  std::vector<bool> seen(img.size(), false);
  std::uint64_t order = 1;
  for (std::size_t start = 0; start < img.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t h = start; !seen[h]; h = img[h]) {
      seen[h] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

Automorphism inner_from(const AbstractGroup& G, Elem y) {
  std::vector<Elem> map(G.order());
  const Elem yi = G.inverse(y);
  for (Elem h = 0; h < G.order(); ++h) map[h] = G.multiply(G.multiply(yi, h), y);
  return Automorphism(G, std::move(map));
}

std::optional<Elem> is_inner(const Automorphism& f) {
  const auto& G = f.ambient();
  const Subgroup Z = center(G);
  // Least element of each coset yZ, in ascending order.
  std::vector<Elem> reps;
  std::vector<bool> covered(G.order(), false);
  for (Elem y = 0; y < G.order(); ++y) {
    if (covered[y]) continue;
    reps.push_back(y);
    for (Elem z : Z.elements()) covered[G.multiply(y, z)] = true;
  }
  const auto& gens = G.generators();
  auto hit = parallel_find_first(reps.size(), [&](std::size_t r) {
    const Elem y = reps[r];
    const Elem yi = G.inverse(y);
    for (Elem s : gens)
      if (G.multiply(G.multiply(yi, s), y) != f.apply(s)) return false;
    return true;
  });
  if (!hit) return std::nullopt;
  return reps[*hit];
}

bool fixes_elementwise(const Automorphism& f, const Subgroup& H) {
  for (Elem h : H.elements())
    if (f.apply(h) != h) return false;
  return true;
}

std::string render_automorphism(const Automorphism& f) {
  const auto& G = f.ambient();
  std::string out;
  const auto& gens = G.generators();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k) out += "; ";
    out += G.generator_name(k) + " -> " + G.render(f.apply(gens[k]));
  }
  return out;
}

}  // namespace pgw
