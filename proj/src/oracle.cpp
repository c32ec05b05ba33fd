#include "pgw/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "pgw/errors.hpp"
#include "pgw/parallel.hpp"
#include "pgw/presentation.hpp"

namespace pgw {

// ---------------------------------------------------------------------------
// Permutation source files

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Permutation parse_cycles(std::string_view text, std::size_t degree, std::size_t line_no,
                         std::size_t column0) {
  Permutation perm(degree);
  std::iota(perm.begin(), perm.end(), std::uint16_t{0});
  std::vector<bool> used(degree, false);
  std::size_t k = 0;
  auto col = [&] { return column0 + k; };
  while (k < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[k]))) {
      ++k;
      continue;
    }
    if (text[k] != '(') throw ParseError(line_no, col(), "expected '(' in cycle notation");
    ++k;
    std::vector<std::size_t> cycle;
    for (;;) {
      while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
      if (k >= text.size()) throw ParseError(line_no, col(), "unterminated cycle");
      if (text[k] == ')') {
        ++k;
        break;
      }
      std::size_t start = k;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      if (start == k) throw ParseError(line_no, col(), "expected a point number");
      std::size_t point = 0;
      std::from_chars(text.data() + start, text.data() + k, point);
      if (point < 1 || point > degree)
        throw ParseError(line_no, column0 + start,
                         "point " + std::to_string(point) + " outside [1, " + std::to_string(degree) + "]");
      if (used[point - 1])
        throw ParseError(line_no, column0 + start, "point " + std::to_string(point) + " repeated");
      used[point - 1] = true;
      cycle.push_back(point - 1);
    }
    for (std::size_t c = 0; c < cycle.size(); ++c)
      perm[cycle[c]] = static_cast<std::uint16_t>(cycle[(c + 1) % cycle.size()]);
  }
  return perm;
}

}  // namespace

PermSource parse_perm_source(std::string_view text) {
  PermSource src;
  bool have_name = false, have_degree = false;
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::string_view body = trim(line);
    if (body.empty()) continue;
    const std::size_t indent = static_cast<std::size_t>(body.data() - line.data());
    auto space = body.find_first_of(" \t");
    std::string_view head = body.substr(0, space);
    std::string_view rest = space == std::string_view::npos ? std::string_view{} : trim(body.substr(space));
    const std::size_t rest_col = rest.empty() ? 0 : static_cast<std::size_t>(rest.data() - line.data()) + 1;

    if (head == "permgroup") {
      if (have_name) throw ParseError(line_no, indent + 1, "duplicate 'permgroup' line");
      if (rest.empty() || rest.find_first_of(" \t") != std::string_view::npos)
        throw ParseError(line_no, indent + 1, "expected 'permgroup <name>'");
      src.name = std::string(rest);
      have_name = true;
    } else if (head == "degree") {
      if (have_degree) throw ParseError(line_no, indent + 1, "duplicate 'degree' line");
      std::size_t d = 0;
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), d);
      if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size() || d == 0 || d > 65535)
        throw ParseError(line_no, rest_col ? rest_col : indent + 1, "expected 'degree <d>' with 1 <= d <= 65535");
      src.degree = d;
      have_degree = true;
    } else if (head == "gen") {
      if (!have_degree) throw ParseError(line_no, indent + 1, "'gen' before 'degree'");
      src.generators.push_back(parse_cycles(rest, src.degree, line_no, rest_col));
    } else {
      throw ParseError(line_no, indent + 1, "unknown directive '" + std::string(head) + "'");
    }
  }
  if (!have_name) throw ParseError(line_no, 0, "missing 'permgroup <name>' line");
  if (!have_degree) throw ParseError(line_no, 0, "missing 'degree <d>' line");
  return src;
}

// ---------------------------------------------------------------------------
// PermGroup

std::size_t PermGroup::PermHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : p) h = (h ^ x) * 1099511628211ull;
  return h;
}

namespace {

Permutation compose_perm(const Permutation& u, const Permutation& v) {
  Permutation out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = v[u[i]];
  return out;
}

}  // namespace

PermGroup PermGroup::from_generators(std::string name, std::size_t degree,
                                     const std::vector<Permutation>& gens,
                                     std::size_t max_order) {
  for (const auto& g : gens)
    if (g.size() != degree) throw PreconditionError("generator has wrong degree");

  Permutation id(degree);
  std::iota(id.begin(), id.end(), std::uint16_t{0});
  std::set<Permutation> seen{id};
  std::deque<Permutation> queue{id};
  while (!queue.empty()) {
    Permutation u = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation v = compose_perm(u, g);
      if (seen.insert(v).second) {
        if (seen.size() > max_order)
          throw ResourceLimit("permutation group '" + name + "' exceeds order cap " +
                              std::to_string(max_order));
        queue.push_back(std::move(v));
      }
    }
  }

  PermGroup G;
  G.name_ = std::move(name);
  G.degree_ = degree;
  G.elements_.assign(seen.begin(), seen.end());
  const std::size_t n = G.elements_.size();
  for (std::size_t k = 0; k < n; ++k) G.index_[G.elements_[k]] = static_cast<Elem>(k);

  if (n > 1) {
    unsigned p = 2;
    while (n % p != 0) ++p;
    std::size_t r = n;
    while (r % p == 0) r /= p;
    if (r != 1 || p == 2)
      throw PreconditionError("group order " + std::to_string(n) + " is not a power of an odd prime");
    G.prime_ = p;
  }

  if (n <= kTableLimit) {
    G.table_.resize(n * n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        G.table_[u * n + v] = G.index_.at(compose_perm(G.elements_[u], G.elements_[v]));
  }
  G.inverses_.resize(n);
  for (std::size_t u = 0; u < n; ++u) {
    Permutation inv(degree);
    for (std::size_t i = 0; i < degree; ++i) inv[G.elements_[u][i]] = static_cast<std::uint16_t>(i);
    G.inverses_[u] = G.index_.at(inv);
  }
  std::set<Elem> added;
  for (const auto& g : gens) {
    Elem idx = G.index_.at(g);
    if (idx != 0 && added.insert(idx).second) G.generators_.push_back(idx);
  }
  return G;
}

PermGroup PermGroup::from_source(const PermSource& src, std::size_t max_order) {
  return from_generators(src.name, src.degree, src.generators, max_order);
}

PermGroup perm_group_from_generators(std::string name, std::size_t degree,
                                     const std::vector<Permutation>& gens, std::size_t max_order) {
  return PermGroup::from_generators(std::move(name), degree, gens, max_order);
}

std::optional<Elem> PermGroup::index_of(const Permutation& perm) const {
  auto it = index_.find(perm);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem PermGroup::multiply(Elem u, Elem v) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(u) * elements_.size() + v];
  return index_.at(compose_perm(elements_[u], elements_[v]));
}

std::string PermGroup::render(Elem u) const {
  const auto& perm = elements_.at(u);
  std::string out;
  std::vector<bool> seen(degree_, false);
  for (std::size_t start = 0; start < degree_; ++start) {
    if (seen[start] || perm[start] == start) continue;
    out += '(';
    for (std::size_t i = start; !seen[i]; i = perm[i]) {
      seen[i] = true;
      if (out.back() != '(') out += ' ';
      out += std::to_string(i + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------------------
// Naive recomputation

namespace {

using ElemSet = std::vector<bool>;

std::vector<Elem> members(const ElemSet& s) {
  std::vector<Elem> out;
  for (std::size_t h = 0; h < s.size(); ++h)
    if (s[h]) out.push_back(static_cast<Elem>(h));
  return out;
}

// Repeatedly multiply everything by the generators until nothing new appears.
ElemSet naive_closure(const AbstractGroup& G, const std::vector<Elem>& gens) {
  ElemSet s(G.order(), false);
  s[G.identity()] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem a : members(s))
      for (Elem g : gens) {
        Elem b = G.multiply(a, g);
        if (!s[b]) s[b] = changed = true;
      }
  }
  return s;
}

std::size_t count(const ElemSet& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)); }

std::uint64_t naive_order(const AbstractGroup& G, Elem h) {
  std::uint64_t k = 1;
  Elem x = h;
  while (x != G.identity()) {
    x = G.multiply(x, h);
    ++k;
  }
  return k;
}

Elem naive_power(const AbstractGroup& G, Elem h, unsigned k) {
  Elem x = G.identity();
  for (unsigned r = 0; r < k; ++r) x = G.multiply(x, h);
  return x;
}

Elem naive_comm(const AbstractGroup& G, Elem u, Elem v) {
  return G.multiply(G.multiply(G.inverse(u), G.inverse(v)), G.multiply(u, v));
}

// [A, A] from every commutator of elements of A.
ElemSet naive_derived(const AbstractGroup& G, const std::vector<Elem>& A) {
  std::set<Elem> comms;
  for (Elem a : A)
    for (Elem b : A) comms.insert(naive_comm(G, a, b));
  return naive_closure(G, std::vector<Elem>(comms.begin(), comms.end()));
}

std::vector<ElemSet> maximal_subgroups(const AbstractGroup& G) {
  // Kernels of nonzero homomorphisms onto Z/p, found by trying every
  // assignment of residues to the generators along the Cayley graph.
  std::vector<ElemSet> out;
  if (G.order() == 1) return out;
  const unsigned p = G.prime();
  const auto& gens = G.generators();
  std::vector<unsigned> values(gens.size(), 0);
  std::set<std::vector<Elem>> kernels;
  for (;;) {
    std::size_t k = 0;
    while (k < values.size() && ++values[k] == p) values[k++] = 0;
    if (k == values.size()) break;

    constexpr unsigned kUnset = ~0u;
    std::vector<unsigned> phi(G.order(), kUnset);
    phi[G.identity()] = 0;
    std::deque<Elem> queue{G.identity()};
    bool ok = true;
    while (!queue.empty() && ok) {
      Elem h = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < gens.size(); ++j) {
        Elem hs = G.multiply(h, gens[j]);
        unsigned v = (phi[h] + values[j]) % p;
        if (phi[hs] == kUnset) {
          phi[hs] = v;
          queue.push_back(hs);
        } else if (phi[hs] != v) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<Elem> ker;
    for (Elem h = 0; h < G.order(); ++h)
      if (phi[h] == 0) ker.push_back(h);
    kernels.insert(std::move(ker));
  }
  for (const auto& ker : kernels) {
    ElemSet s(G.order(), false);
    for (Elem h : ker) s[h] = true;
    out.push_back(std::move(s));
  }
  return out;
}

ElemSet naive_frattini(const AbstractGroup& G, std::size_t* maximal_count = nullptr) {
  auto maxes = maximal_subgroups(G);
  if (maximal_count) *maximal_count = maxes.size();
  ElemSet phi(G.order(), true);
  for (const auto& m : maxes)
    for (std::size_t h = 0; h < phi.size(); ++h) phi[h] = phi[h] && m[h];
  return phi;
}

struct NaiveSeries {
  std::vector<std::size_t> gamma_orders;
  std::vector<std::size_t> z_orders;
  std::vector<ElemSet> gamma;
  ElemSet center;
};

NaiveSeries naive_series(const AbstractGroup& G) {
  NaiveSeries out;
  const std::size_t n = G.order();
  ElemSet term(n, true);
  for (;;) {
    out.gamma.push_back(term);
    out.gamma_orders.push_back(count(term));
    if (count(term) == 1) break;
    std::set<Elem> comms;
    for (Elem u : members(term))
      for (Elem g = 0; g < n; ++g) comms.insert(naive_comm(G, u, g));
    ElemSet next = naive_closure(G, std::vector<Elem>(comms.begin(), comms.end()));
    if (count(next) == count(term)) throw std::logic_error("oracle: group is not nilpotent");
    term = std::move(next);
  }

  ElemSet z(n, false);
  z[G.identity()] = true;
  for (;;) {
    out.z_orders.push_back(count(z));
    if (out.z_orders.size() == 2) out.center = z;
    if (count(z) == n) break;
    ElemSet next(n, false);
    for (Elem x = 0; x < n; ++x) {
      bool in = true;
      for (Elem g = 0; g < n && in; ++g) in = z[naive_comm(G, x, g)];
      next[x] = in;
    }
    if (count(next) == count(z)) throw std::logic_error("oracle: group is not nilpotent");
    z = std::move(next);
  }
  if (out.z_orders.size() == 1) out.center = z;
  return out;
}

bool naive_regular(const AbstractGroup& G) {
  const std::size_t n = G.order();
  const unsigned p = G.prime();
  std::map<std::vector<Elem>, ElemSet> cache;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem lhs = naive_power(G, G.multiply(x, y), p);
      Elem rhs = G.multiply(naive_power(G, x, p), naive_power(G, y, p));
      Elem t = G.multiply(G.inverse(rhs), lhs);
      if (t == G.identity()) continue;
      auto H = members(naive_closure(G, {x, y}));
      auto it = cache.find(H);
      if (it == cache.end()) {
        auto d = members(naive_derived(G, H));
        std::vector<Elem> pw;
        for (Elem h : d) pw.push_back(naive_power(G, h, p));
        it = cache.emplace(H, naive_closure(G, pw)).first;
      }
      if (!it->second[t]) return false;
    }
  return true;
}

}  // namespace

Subgroup oracle_frattini(const AbstractGroup& G) {
  return Subgroup(G, members(naive_frattini(G)), {});
}

OracleSnapshot oracle_recompute(const AbstractGroup& G) {
  OracleSnapshot snap;
  auto& v = snap.invariants;
  const std::size_t n = G.order();
  const unsigned p = G.prime();
  v.order = n;

  const auto series = naive_series(G);
  v.gamma_orders = series.gamma_orders;
  v.z_orders = series.z_orders;
  v.nilpotency_class = series.gamma_orders.size() - 1;
  std::size_t m = 0;
  for (std::size_t r = n; r > 1; r /= p) ++m;
  v.coclass = n == 1 ? 0 : m - v.nilpotency_class;

  ElemSet center(n, false);
  for (Elem a = 0; a < n; ++a) {
    bool central = true;
    for (Elem b = 0; b < n && central; ++b) central = G.multiply(a, b) == G.multiply(b, a);
    center[a] = central;
  }
  v.center_order = count(center);

  const ElemSet phi = naive_frattini(G, &snap.maximal_subgroup_count);
  snap.frattini_via_maximal = count(phi);
  v.frattini_order = snap.frattini_via_maximal;
  {
    std::vector<Elem> gens = members(series.gamma.size() > 1 ? series.gamma[1] : ElemSet(n, false));
    for (Elem h = 0; h < n; ++h) gens.push_back(naive_power(G, h, p));
    ElemSet alt = naive_closure(G, gens);
    snap.frattini_via_powers_and_commutators = count(alt);
    snap.frattini_routes_agree = alt == phi;
  }
  std::size_t index = n / v.frattini_order;
  v.min_generators = 0;
  for (; index > 1; index /= p) ++v.min_generators;

  auto& f = v.flags;
  std::uint64_t exponent = 1;
  bool all_p = true;
  for (Elem h = 0; h < n; ++h) {
    auto o = naive_order(G, h);
    exponent = std::max(exponent, o);
    all_p = all_p && (o == 1 || o == p);
  }
  v.exponent = exponent;
  f.abelian = v.center_order == n;
  f.elementary_abelian = f.abelian && all_p;
  f.max_cyclic_order = exponent;
  f.cyclic = exponent == n;

  f.p_abelian = true;
  for (Elem x = 0; x < n && f.p_abelian; ++x)
    for (Elem y = 0; y < n && f.p_abelian; ++y)
      f.p_abelian = naive_power(G, G.multiply(x, y), p) ==
                    G.multiply(naive_power(G, x, p), naive_power(G, y, p));
  f.regular = n == 1 || naive_regular(G);

  {
    auto d = members(series.gamma.size() > 1 ? series.gamma[1] : ElemSet(n, false));
    if (d.empty()) d.push_back(G.identity());
    bool ea = true;
    for (Elem a : d) {
      ea = ea && naive_power(G, a, p) == G.identity();
      for (Elem b : d) ea = ea && G.multiply(a, b) == G.multiply(b, a);
    }
    f.gamma2_elementary_abelian = ea;
  }
  const std::size_t p3 = static_cast<std::size_t>(p) * p * p;
  f.cyclic_subgroup_index_p3 = p != 0 && n >= p3 && n % p3 == 0 && exponent >= n / p3;
  return snap;
}

bool oracle_is_inner(const Automorphism& f) {
  const auto& G = f.ambient();
  for (Elem y = 0; y < G.order(); ++y) {
    bool same = true;
    const Elem yi = G.inverse(y);
    for (Elem h = 0; h < G.order() && same; ++h) same = G.multiply(G.multiply(yi, h), y) == f.apply(h);
    if (same) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Exhaustive search

namespace {

struct Edge {
  Elem from;
  std::size_t gen;
  Elem to;
};

class AutomorphismSearch {
 public:
  AutomorphismSearch(const AbstractGroup& G, bool require_fix, const SearchLimits& limits)
      : G_(G), require_fix_(require_fix) {
    if (G.order() > limits.max_order)
      throw ResourceLimit("exhaustive search: order " + std::to_string(G.order()) +
                          " exceeds cap " + std::to_string(limits.max_order));
    phi_ = naive_frattini(G);

    // Minimal generating set: least elements independent modulo Phi.
    std::vector<Elem> span_gens = members(phi_);
    ElemSet spanned = phi_;
    while (count(spanned) < G.order()) {
      Elem s = 0;
      while (spanned[s]) ++s;
      gens_.push_back(s);
      span_gens.push_back(s);
      spanned = naive_closure(G, span_gens);
    }
    if (gens_.size() > limits.max_generators)
      throw ResourceLimit("exhaustive search: " + std::to_string(gens_.size()) +
                          " generators exceed cap " + std::to_string(limits.max_generators));

    const unsigned p = G.prime();
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      const auto ord = naive_order(G, gens_[k]);
      const Elem target_power = naive_power(G, gens_[k], p);
      std::vector<Elem> cand;
      for (Elem t = 0; t < G.order(); ++t) {
        if (phi_[t] || naive_order(G, t) != ord) continue;
        if (require_fix_ && naive_power(G, t, p) != target_power) continue;
        cand.push_back(t);
      }
      candidates_.push_back(std::move(cand));
    }

    // Cayley graph edges of each prefix subgroup <s_0, ..., s_k>, BFS order.
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      std::vector<Edge> edges;
      ElemSet seen(G.order(), false);
      seen[G.identity()] = true;
      std::deque<Elem> queue{G.identity()};
      while (!queue.empty()) {
        Elem h = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j <= k; ++j) {
          Elem hs = G.multiply(h, gens_[j]);
          edges.push_back({h, j, hs});
          if (!seen[hs]) {
            seen[hs] = true;
            queue.push_back(hs);
          }
        }
      }
      edges_.push_back(std::move(edges));
    }
  }

  std::size_t first_level_size() const { return gens_.empty() ? 1 : candidates_[0].size(); }

  /// Depth-first search of the subtree with the first image fixed to
  /// candidates_[0][first]; returns the first accepted map.
  template <class Accept>
  std::optional<std::vector<Elem>> run(std::size_t first, Accept&& accept, SearchStats& stats) const {
    std::vector<Elem> images;
    std::vector<Elem> map(G_.order());
    if (gens_.empty()) {
      ++stats.nodes;
      map[G_.identity()] = G_.identity();
      if (accept(map)) return map;
      return std::nullopt;
    }
    images.push_back(candidates_[0][first]);
    return descend(images, map, accept, stats);
  }

 private:
  // Extends the homomorphism to <s_0..s_k> for k = images.size() - 1.
  bool extend(const std::vector<Elem>& images, std::vector<Elem>& map) const {
    constexpr Elem kUnset = ~Elem{0};
    std::fill(map.begin(), map.end(), kUnset);
    map[G_.identity()] = G_.identity();
    for (const auto& e : edges_[images.size() - 1]) {
      Elem im = G_.multiply(map[e.from], images[e.gen]);
      if (map[e.to] == kUnset) {
        if (im == G_.identity()) return false;  // nontrivial kernel
        if (require_fix_ && phi_[e.to] && im != e.to) return false;
        map[e.to] = im;
      } else if (map[e.to] != im) {
        return false;
      }
    }
    return true;
  }

  template <class Accept>
  std::optional<std::vector<Elem>> descend(std::vector<Elem>& images, std::vector<Elem>& map,
                                           Accept& accept, SearchStats& stats) const {
    ++stats.nodes;
    if (!extend(images, map)) return std::nullopt;
    if (images.size() == gens_.size()) {
      if (accept(map)) return map;
      return std::nullopt;
    }
    for (Elem t : candidates_[images.size()]) {
      images.push_back(t);
      auto hit = descend(images, map, accept, stats);
      images.pop_back();
      if (hit) return hit;
    }
    return std::nullopt;
  }

  const AbstractGroup& G_;
  bool require_fix_;
  ElemSet phi_;
  std::vector<Elem> gens_;
  std::vector<std::vector<Elem>> candidates_;
  std::vector<std::vector<Edge>> edges_;
};

std::uint64_t map_order(const std::vector<Elem>& map) {
  std::vector<bool> seen(map.size(), false);
  std::uint64_t order = 1;
  for (std::size_t s = 0; s < map.size(); ++s) {
    std::uint64_t len = 0;
    for (std::size_t h = s; !seen[h]; h = map[h]) {
      seen[h] = true;
      ++len;
    }
    if (len) order = std::lcm(order, len);
  }
  return order;
}

}  // namespace

std::optional<Automorphism> exhaustive_noninner_search(const AbstractGroup& G,
                                                       bool require_fix_frattini,
                                                       const SearchLimits& limits,
                                                       SearchStats* stats) {
  const AutomorphismSearch search(G, require_fix_frattini, limits);
  const unsigned p = G.prime();
  const std::size_t n = search.first_level_size();
  std::vector<std::optional<std::vector<Elem>>> found(n);
  std::atomic<std::size_t> nodes{0}, autos{0};

  auto accept = [&](const std::vector<Elem>& map) {
    ++autos;
    if (p == 0 || map_order(map) != p) return false;
    return !oracle_is_inner(Automorphism(G, map));
  };
  auto hit = parallel_find_first(n, [&](std::size_t i) {
    SearchStats local;
    found[i] = search.run(i, accept, local);
    nodes += local.nodes;
    return found[i].has_value();
  });
  if (stats) {
    stats->nodes = nodes.load();
    stats->automorphisms = autos.load();
  }
  if (!hit) return std::nullopt;
  return Automorphism(G, *found[*hit]);
}

std::vector<Automorphism> all_automorphisms(const AbstractGroup& G, const SearchLimits& limits) {
  const AutomorphismSearch search(G, false, limits);
  std::vector<Automorphism> out;
  auto accept = [&](const std::vector<Elem>& map) {
    out.emplace_back(G, map);
    return false;
  };
  SearchStats stats;
  for (std::size_t i = 0; i < search.first_level_size(); ++i) search.run(i, accept, stats);
  return out;
}

// ---------------------------------------------------------------------------
// Cross validation

CrossValidationReport compare_invariants(const InvariantVector& a, const InvariantVector& b) {
  CrossValidationReport out;
  const auto fa = invariant_fields(a);
  const auto fb = invariant_fields(b);
  for (std::size_t k = 0; k < fa.size(); ++k)
    out.fields.push_back({fa[k].first, fa[k].second, fb[k].second, fa[k].second == fb[k].second});
  out.all_equal = std::all_of(out.fields.begin(), out.fields.end(),
                              [](const FieldComparison& f) { return f.equal; });
  return out;
}

CrossValidationReport cross_validate(const GroupCtx& pc, const PermGroup& perm) {
  return compare_invariants(compute_invariants(pc), oracle_recompute(perm).invariants);
}

}  // namespace pgw
