#include "pgw/pcgroup.hpp"

#include <stdexcept>

#include "pgw/errors.hpp"

namespace pgw {

GroupCtx GroupCtx::create(PcPresentation pres, std::size_t max_order) {
  std::size_t order = 1;
  for (std::size_t k = 0; k < pres.rank(); ++k) {
    if (order > max_order / pres.prime())
      throw ResourceLimit("group order " + std::to_string(pres.prime()) + "^" +
                          std::to_string(pres.rank()) + " exceeds cap " + std::to_string(max_order));
    order *= pres.prime();
  }
  auto report = check_consistency(pres, ConsistencyMode::OverlapTests);
  if (!report.consistent)
    throw InconsistentPresentation("presentation '" + pres.name() + "' fails overlap test " +
                                   report.failures.front().test);
  return GroupCtx(std::move(pres), order);
}

GroupCtx::GroupCtx(PcPresentation pres, std::size_t order)
    : pres_(std::move(pres)), collector_(pres_), order_(order) {
  std::size_t stride = order_;
  for (std::size_t i = 0; i < rank(); ++i) {
    stride /= prime();
    generator_indices_.push_back(static_cast<Elem>(stride));
  }
}

void GroupCtx::check_rank(const Element& h) const {
  if (h.exponents.size() != rank())
    throw std::invalid_argument("rank mismatch between element and context");
}

Element GroupCtx::generator(std::size_t i) const {
  Element g = identity_element();
  g.exponents.at(i) = 1;
  return g;
}

Element GroupCtx::collect(const Word& w) const { return collect(w, nullptr); }

Element GroupCtx::collect(const Word& w, std::size_t* steps) const {
  Element out = identity_element();
  auto n = collector_.collect_into(out.exponents, w);
  if (steps) *steps = n;
  return out;
}

Element GroupCtx::multiply(const Element& u, const Element& v) const {
  check_rank(u);
  check_rank(v);
  return Element{collector_.multiply(u.exponents, v.exponents)};
}

Element GroupCtx::inverse(const Element& h) const {
  check_rank(h);
  // Right-multiply by g_i^{p - r_i} to clear the leading exponent; the
  // accumulated multipliers form the inverse.
  ExponentVector r = h.exponents;
  ExponentVector x(rank(), 0);
  for (std::size_t i = 0; i < rank(); ++i) {
    if (r[i] == 0) continue;
    const Word step{{i, prime() - r[i]}};
    collector_.collect_into(r, step);
    collector_.collect_into(x, step);
  }
  return Element{std::move(x)};
}

Element GroupCtx::power(const Element& h, long long k) const {
  check_rank(h);
  Element base = k < 0 ? inverse(h) : h;
  unsigned long long n = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1 : k;
  Element result = identity_element();
  while (n > 0) {
    if (n & 1) result = multiply(result, base);
    n >>= 1;
    if (n > 0) base = multiply(base, base);
  }
  return result;
}

Element GroupCtx::commutator(const Element& u, const Element& v) const {
  return multiply(multiply(inverse(u), inverse(v)), multiply(u, v));
}

std::uint64_t GroupCtx::element_order(const Element& h) const {
  check_rank(h);
  const Element e = identity_element();
  std::uint64_t order = 1;
  for (Element y = h; y != e; y = power(y, prime())) order *= prime();
  return order;
}

std::vector<Element> GroupCtx::enumerate_elements() const {
  std::vector<Element> out;
  out.reserve(order_);
  for (std::size_t idx = 0; idx < order_; ++idx) out.push_back(element_at(static_cast<Elem>(idx)));
  return out;
}

Elem GroupCtx::index_of(const Element& h) const {
  check_rank(h);
  std::size_t idx = 0;
  for (auto e : h.exponents) idx = idx * prime() + e;
  return static_cast<Elem>(idx);
}

Element GroupCtx::element_at(Elem idx) const {
  if (idx >= order_) throw std::out_of_range("element index outside group");
  Element h = identity_element();
  std::size_t r = idx;
  for (std::size_t k = rank(); k-- > 0;) {
    h.exponents[k] = static_cast<std::uint8_t>(r % prime());
    r /= prime();
  }
  return h;
}

Element GroupCtx::parse_element(std::string_view word) const {
  return collect(parse_word(pres_, word));
}

std::string GroupCtx::render(const Element& h) const { return render_word(pres_, h.exponents); }

Elem GroupCtx::multiply(Elem u, Elem v) const {
  return index_of(multiply(element_at(u), element_at(v)));
}

Elem GroupCtx::inverse(Elem u) const { return index_of(inverse(element_at(u))); }

std::string GroupCtx::generator_name(std::size_t i) const {
  return pres_.generator_names().at(i);
}

std::string GroupCtx::render(Elem u) const { return render(element_at(u)); }

}  // namespace pgw
