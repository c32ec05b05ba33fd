#include "pgw/group.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace pgw {

Elem power(const AbstractGroup& G, Elem h, long long k) {
  if (k < 0) {
    h = G.inverse(h);
    k = -k;
  }
  Elem result = G.identity();
  Elem base = h;
  while (k > 0) {
    if (k & 1) result = G.multiply(result, base);
    k >>= 1;
    if (k > 0) base = G.multiply(base, base);
  }
  return result;
}

Elem commutator(const AbstractGroup& G, Elem u, Elem v) {
  return G.multiply(G.multiply(G.inverse(u), G.inverse(v)), G.multiply(u, v));
}

Elem conjugate(const AbstractGroup& G, Elem h, Elem y) {
  return G.multiply(G.multiply(G.inverse(y), h), y);
}

std::uint64_t element_order(const AbstractGroup& G, Elem h) {
  std::uint64_t k = 1;
  for (Elem x = h; x != G.identity(); x = G.multiply(x, h)) ++k;
  return k;
}

namespace {

std::size_t initial_max_order() {
  if (const char* env = std::getenv("PGW_MAX_ORDER")) {
    try {
      auto v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  return 2187;
}

std::atomic<std::size_t>& max_order_setting() {
  static std::atomic<std::size_t> value{initial_max_order()};
  return value;
}

}  // namespace

std::size_t default_max_order() { return max_order_setting().load(); }
void set_default_max_order(std::size_t cap) { max_order_setting().store(cap); }

}  // namespace pgw
