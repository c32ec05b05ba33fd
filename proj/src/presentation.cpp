#include "pgw/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pgw/collector.hpp"
#include "pgw/errors.hpp"

namespace pgw {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PcPresentation::PcPresentation(std::string name, unsigned prime,
                               std::vector<std::string> generators,
                               std::vector<ExponentVector> powers,
                               std::vector<ExponentVector> commutators)
    : name_(std::move(name)),
      prime_(prime),
      generators_(std::move(generators)),
      powers_(std::move(powers)),
      commutators_(std::move(commutators)) {
  validate();
}

PcPresentation PcPresentation::elementary_abelian(std::string name, unsigned prime,
                                                  std::vector<std::string> generators) {
  const std::size_t n = generators.size();
  std::vector<ExponentVector> powers(n, ExponentVector(n, 0));
  std::vector<ExponentVector> comms(n * (n == 0 ? 0 : n - 1) / 2, ExponentVector(n, 0));
  return PcPresentation(std::move(name), prime, std::move(generators), std::move(powers),
                        std::move(comms));
}

void PcPresentation::validate() const {
  if (!is_prime(prime_) || prime_ == 2 || prime_ > kMaxPrime)
    throw std::invalid_argument("prime must be an odd prime not above 251, got " +
                                std::to_string(prime_));
  const std::size_t n = rank();
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.empty()) throw std::invalid_argument("empty generator name");
    if (!seen.insert(g).second) throw std::invalid_argument("duplicate generator " + g);
  }
  if (powers_.size() != n) throw std::invalid_argument("one power relation per generator required");
  if (commutators_.size() != n * (n == 0 ? 0 : n - 1) / 2)
    throw std::invalid_argument("one commutator relation per generator pair required");

  auto check_word = [&](const ExponentVector& w, std::size_t lowest, const std::string& rel) {
    if (w.size() != n) throw std::invalid_argument(rel + ": word has wrong length");
    for (std::size_t k = 0; k < n; ++k) {
      if (w[k] >= prime_) throw std::invalid_argument(rel + ": exponent outside [0, p)");
      if (w[k] != 0 && k < lowest)
        throw std::invalid_argument(rel + ": word references disallowed generator " +
                                    generators_[k]);
    }
  };
  for (std::size_t i = 0; i < n; ++i) check_word(powers_[i], i + 1, "pow " + generators_[i]);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      check_word(commutators_[commutator_slot(j, i)], j + 1,
                 "comm " + generators_[j] + " " + generators_[i]);
}

std::optional<std::size_t> PcPresentation::generator_index(std::string_view name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generators_.begin());
}

const ExponentVector& PcPresentation::commutator(std::size_t j, std::size_t i) const {
  if (!(i < j && j < rank())) throw std::out_of_range("commutator index requires i < j < rank");
  return commutators_[commutator_slot(j, i)];
}

PcPresentation PcPresentation::with_power(std::size_t i, ExponentVector word) const {
  auto powers = powers_;
  powers.at(i) = std::move(word);
  return PcPresentation(name_, prime_, generators_, std::move(powers), commutators_);
}

PcPresentation PcPresentation::with_commutator(std::size_t j, std::size_t i,
                                               ExponentVector word) const {
  if (!(i < j && j < rank())) throw std::out_of_range("commutator index requires i < j < rank");
  auto comms = commutators_;
  comms[commutator_slot(j, i)] = std::move(word);
  return PcPresentation(name_, prime_, generators_, powers_, std::move(comms));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    if (k >= line.size()) break;
    std::size_t start = k;
    while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    out.push_back({line.substr(start, k - start), start + 1});
  }
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// Group names may also contain '-' and '.', e.g. "bad-sample".
bool is_group_name(std::string_view s) {
  if (s.empty() || !std::isalnum(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  });
}

std::optional<unsigned long> parse_unsigned(std::string_view s) {
  unsigned long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

struct Factor {
  std::size_t gen;
  unsigned long exp;
  std::size_t column;
};

// Parses "gen" or "gen^exp" factors; "1" alone is the identity.
std::vector<Factor> parse_factors(const std::vector<std::string>& gens,
                                  const std::vector<Token>& tokens, std::size_t first,
                                  std::size_t line_no) {
  std::vector<Factor> out;
  if (tokens.size() == first + 1 && tokens[first].text == "1") return out;
  for (std::size_t t = first; t < tokens.size(); ++t) {
    const auto& tok = tokens[t];
    auto caret = tok.text.find('^');
    std::string_view name = tok.text.substr(0, caret);
    unsigned long exp = 1;
    if (caret != std::string_view::npos) {
      auto parsed = parse_unsigned(tok.text.substr(caret + 1));
      if (!parsed)
        throw ParseError(line_no, tok.column + caret + 1,
                         "malformed exponent in '" + std::string(tok.text) + "'");
      exp = *parsed;
    }
    if (!is_identifier(name))
      throw ParseError(line_no, tok.column, "malformed factor '" + std::string(tok.text) + "'");
    auto it = std::find(gens.begin(), gens.end(), name);
    if (it == gens.end())
      throw ParseError(line_no, tok.column, "unknown generator '" + std::string(name) + "'");
    out.push_back({static_cast<std::size_t>(it - gens.begin()), exp, tok.column});
  }
  return out;
}

ExponentVector parse_normal_word(const std::vector<std::string>& gens, unsigned prime,
                                 const std::vector<Token>& tokens, std::size_t first,
                                 std::size_t line_no, std::size_t lowest,
                                 const std::string& relation) {
  ExponentVector word(gens.size(), 0);
  std::optional<std::size_t> last;
  for (const auto& f : parse_factors(gens, tokens, first, line_no)) {
    if (f.exp >= prime)
      throw ParseError(line_no, f.column,
                       "exponent " + std::to_string(f.exp) + " outside [0, " +
                           std::to_string(prime) + ")");
    if (last && f.gen <= *last)
      throw ParseError(line_no, f.column,
                       "word factors must appear in strictly increasing generator order");
    last = f.gen;
    if (f.exp == 0) continue;
    if (f.gen < lowest)
      throw ParseError(line_no, f.column,
                       relation + " references disallowed generator '" + gens[f.gen] +
                           "' (relation words may only use later generators)");
    word[f.gen] = static_cast<std::uint8_t>(f.exp);
  }
  return word;
}

}  // namespace

PcPresentation parse_presentation(std::string_view text) {
  std::optional<std::string> name;
  std::optional<unsigned> prime;
  std::optional<std::vector<std::string>> gens;
  std::map<std::size_t, ExponentVector> powers;
  std::map<std::pair<std::size_t, std::size_t>, ExponentVector> comms;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const auto& head = tokens[0];

    auto require_header = [&](const char* what) {
      if (!prime) throw ParseError(line_no, head.column, std::string(what) + " before 'prime'");
      if (!gens) throw ParseError(line_no, head.column, std::string(what) + " before 'gens'");
    };

    if (head.text == "group") {
      if (name) throw ParseError(line_no, head.column, "duplicate 'group' line");
      if (tokens.size() != 2 || !is_group_name(tokens[1].text))
        throw ParseError(line_no, head.column, "expected 'group <name>'");
      name = std::string(tokens[1].text);
    } else if (head.text == "prime") {
      if (prime) throw ParseError(line_no, head.column, "duplicate 'prime' line");
      if (tokens.size() != 2) throw ParseError(line_no, head.column, "expected 'prime <p>'");
      auto p = parse_unsigned(tokens[1].text);
      if (!p) throw ParseError(line_no, tokens[1].column, "prime is not a number");
      if (*p == 2) throw ParseError(line_no, tokens[1].column, "prime must be odd (p = 2 is not supported)");
      if (*p > PcPresentation::kMaxPrime || !is_prime(static_cast<unsigned>(*p)))
        throw ParseError(line_no, tokens[1].column,
                         std::string(tokens[1].text) + " is not an odd prime up to 251");
      prime = static_cast<unsigned>(*p);
    } else if (head.text == "gens") {
      if (gens) throw ParseError(line_no, head.column, "duplicate 'gens' line");
      std::vector<std::string> names;
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        if (!is_identifier(tokens[t].text))
          throw ParseError(line_no, tokens[t].column, "malformed generator name '" + std::string(tokens[t].text) + "'");
        if (std::find(names.begin(), names.end(), tokens[t].text) != names.end())
          throw ParseError(line_no, tokens[t].column, "duplicate generator '" + std::string(tokens[t].text) + "'");
        names.emplace_back(tokens[t].text);
      }
      gens = std::move(names);
    } else if (head.text == "pow") {
      require_header("'pow'");
      if (tokens.size() < 3 || tokens[2].text != "=")
        throw ParseError(line_no, head.column, "expected 'pow <gen> = <word>'");
      auto gi = std::find(gens->begin(), gens->end(), tokens[1].text);
      if (gi == gens->end())
        throw ParseError(line_no, tokens[1].column, "unknown generator '" + std::string(tokens[1].text) + "'");
      std::size_t i = static_cast<std::size_t>(gi - gens->begin());
      if (powers.count(i))
        throw ParseError(line_no, head.column, "duplicate relation 'pow " + (*gens)[i] + "'");
      powers[i] = parse_normal_word(*gens, *prime, tokens, 3, line_no, i + 1, "pow " + (*gens)[i]);
    } else if (head.text == "comm") {
      require_header("'comm'");
      if (tokens.size() < 4 || tokens[3].text != "=")
        throw ParseError(line_no, head.column, "expected 'comm <gj> <gi> = <word>'");
      std::size_t idx[2];
      for (int s = 0; s < 2; ++s) {
        auto it = std::find(gens->begin(), gens->end(), tokens[1 + s].text);
        if (it == gens->end())
          throw ParseError(line_no, tokens[1 + s].column,
                           "unknown generator '" + std::string(tokens[1 + s].text) + "'");
        idx[s] = static_cast<std::size_t>(it - gens->begin());
      }
      const std::size_t j = idx[0], i = idx[1];
      if (j <= i)
        throw ParseError(line_no, tokens[1].column,
                         "malformed commutator relation: 'comm " + (*gens)[j] + " " + (*gens)[i] +
                             "' requires the left generator to come after the right one");
      if (comms.count({j, i}))
        throw ParseError(line_no, head.column,
                         "duplicate relation 'comm " + (*gens)[j] + " " + (*gens)[i] + "'");
      comms[{j, i}] = parse_normal_word(*gens, *prime, tokens, 4, line_no, j + 1,
                                        "comm " + (*gens)[j] + " " + (*gens)[i]);
    } else {
      throw ParseError(line_no, head.column, "unknown directive '" + std::string(head.text) + "'");
    }
  }

  if (!name) throw ParseError(line_no, 0, "missing 'group <name>' line");
  if (!prime) throw ParseError(line_no, 0, "missing 'prime <p>' line");
  if (!gens) throw ParseError(line_no, 0, "missing 'gens' line");

  const std::size_t n = gens->size();
  std::vector<ExponentVector> pw(n, ExponentVector(n, 0));
  for (auto& [i, w] : powers) pw[i] = std::move(w);
  std::vector<ExponentVector> cm(n * (n == 0 ? 0 : n - 1) / 2, ExponentVector(n, 0));
  for (auto& [ji, w] : comms) cm[PcPresentation::commutator_slot(ji.first, ji.second)] = std::move(w);
  return PcPresentation(std::move(*name), *prime, std::move(*gens), std::move(pw), std::move(cm));
}

std::string render_word(const PcPresentation& pres, const ExponentVector& exps) {
  std::string out;
  for (std::size_t k = 0; k < exps.size(); ++k) {
    if (exps[k] == 0) continue;
    if (!out.empty()) out += ' ';
    out += pres.generator_names()[k] + "^" + std::to_string(exps[k]);
  }
  return out.empty() ? "1" : out;
}

std::string serialize_presentation(const PcPresentation& pres) {
  auto word = [&](const ExponentVector& w) {
    auto s = render_word(pres, w);
    return s == "1" ? std::string() : s;
  };
  std::ostringstream out;
  out << "group " << pres.name() << '\n' << "prime " << pres.prime() << '\n' << "gens";
  for (const auto& g : pres.generator_names()) out << ' ' << g;
  out << '\n';
  const auto& names = pres.generator_names();
  for (std::size_t i = 0; i < pres.rank(); ++i)
    out << "pow " << names[i] << " = " << word(pres.power(i)) << '\n';
  for (std::size_t j = 1; j < pres.rank(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      out << "comm " << names[j] << ' ' << names[i] << " = " << word(pres.commutator(j, i)) << '\n';
  return out.str();
}

Word parse_word(const PcPresentation& pres, std::string_view text) {
  auto tokens = tokenize(text);
  Word out;
  for (const auto& f : parse_factors(pres.generator_names(), tokens, 0, 1))
    if (f.exp != 0) out.push_back({f.gen, static_cast<unsigned>(f.exp)});
  return out;
}

Word to_word(const ExponentVector& exps) {
  Word out;
  for (std::size_t k = 0; k < exps.size(); ++k)
    if (exps[k] != 0) out.push_back({k, exps[k]});
  return out;
}

// ---------------------------------------------------------------------------
// Consistency

std::string_view to_string(ConsistencyMode mode) {
  return mode == ConsistencyMode::OverlapTests ? "overlap-tests" : "full-associativity";
}

namespace {

ExponentVector unit(std::size_t rank, std::size_t i, unsigned exp = 1) {
  ExponentVector v(rank, 0);
  v[i] = static_cast<std::uint8_t>(exp);
  return v;
}

ConsistencyReport overlap_tests(const PcPresentation& pres) {
  ConsistencyReport report;
  report.method = ConsistencyMode::OverlapTests;
  const Collector col(pres);
  const std::size_t n = pres.rank();
  const unsigned p = pres.prime();
  const auto& names = pres.generator_names();

  auto word_of = [](std::initializer_list<Letter> l) { return Word(l); };
  auto test = [&](std::string id, const ExponentVector& lhs, const ExponentVector& rhs) {
    if (lhs != rhs) report.failures.push_back({std::move(id), lhs, rhs});
  };

  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        auto left = col.collect(word_of({{k, 1}, {j, 1}}));
        col.collect_into(left, word_of({{i, 1}}));
        auto right = col.collect(word_of({{k, 1}}));
        col.collect_into(right, col.collect(word_of({{j, 1}, {i, 1}})));
        test("(" + names[k] + " " + names[j] + ") " + names[i] + " = " + names[k] + " (" +
                 names[j] + " " + names[i] + ")",
             left, right);
      }

  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      auto left = pres.power(j);
      col.collect_into(left, word_of({{i, 1}}));
      auto right = unit(n, j, p - 1);
      col.collect_into(right, col.collect(word_of({{j, 1}, {i, 1}})));
      test("(" + names[j] + "^" + std::to_string(p) + ") " + names[i] + " = " + names[j] + "^" +
               std::to_string(p - 1) + " (" + names[j] + " " + names[i] + ")",
           left, right);
    }

  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      auto left = col.collect(word_of({{j, 1}, {i, p - 1}}));
      col.collect_into(left, word_of({{i, 1}}));
      auto right = unit(n, j);
      col.collect_into(right, pres.power(i));
      test("(" + names[j] + " " + names[i] + "^" + std::to_string(p - 1) + ") " + names[i] +
               " = " + names[j] + " (" + names[i] + "^" + std::to_string(p) + ")",
           left, right);
    }

  for (std::size_t i = 0; i < n; ++i) {
    auto left = pres.power(i);
    col.collect_into(left, word_of({{i, 1}}));
    auto right = unit(n, i);
    col.collect_into(right, pres.power(i));
    test("(" + names[i] + "^" + std::to_string(p) + ") " + names[i] + " = " + names[i] + " (" +
             names[i] + "^" + std::to_string(p) + ")",
         left, right);
  }

  report.consistent = report.failures.empty();
  return report;
}

ConsistencyReport full_associativity(const PcPresentation& pres, std::size_t max_order) {
  ConsistencyReport report;
  report.method = ConsistencyMode::FullAssociativity;
  const std::size_t n = pres.rank();
  const unsigned p = pres.prime();
  std::size_t order = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (order > max_order / p)
      throw ResourceLimit("full-associativity check: order " + std::to_string(p) + "^" +
                          std::to_string(n) + " exceeds cap " + std::to_string(max_order));
    order *= p;
  }

  std::vector<ExponentVector> words(order, ExponentVector(n, 0));
  for (std::size_t idx = 0; idx < order; ++idx) {
    std::size_t r = idx;
    for (std::size_t k = n; k-- > 0;) {
      words[idx][k] = static_cast<std::uint8_t>(r % p);
      r /= p;
    }
  }
  auto index_of = [&](const ExponentVector& v) {
    std::size_t idx = 0;
    for (auto e : v) idx = idx * p + e;
    return idx;
  };

  // Every product is a collection of the concatenated normal words.
  const Collector col(pres);
  std::vector<std::uint32_t> table(order * order);
  for (std::size_t u = 0; u < order; ++u)
    for (std::size_t v = 0; v < order; ++v)
      table[u * order + v] = static_cast<std::uint32_t>(index_of(col.multiply(words[u], words[v])));
  auto mul = [&](std::size_t u, std::size_t v) { return table[u * order + v]; };

  constexpr std::size_t kMaxReported = 16;
  auto record = [&](std::size_t u, std::size_t v, std::size_t w, std::size_t lhs, std::size_t rhs) {
    if (report.failures.size() < kMaxReported)
      report.failures.push_back({"(" + render_word(pres, words[u]) + ")(" + render_word(pres, words[v]) +
                                     ")(" + render_word(pres, words[w]) + ")",
                                 words[lhs], words[rhs]});
  };

  constexpr std::size_t kExhaustiveTripleLimit = 729;
  if (order <= kExhaustiveTripleLimit) {
    for (std::size_t u = 0; u < order; ++u)
      for (std::size_t v = 0; v < order; ++v) {
        const std::size_t uv = mul(u, v);
        for (std::size_t w = 0; w < order; ++w) {
          const std::size_t lhs = mul(uv, w), rhs = mul(u, mul(v, w));
          if (lhs != rhs) record(u, v, w, lhs, rhs);
        }
      }
  } else {
    // Light's test: (ua)w = u(aw) for all u, w and every generator a implies
    // associativity, since the generators generate the magma.
    for (std::size_t g = 0; g < n; ++g) {
      const std::size_t a = index_of(unit(n, g));
      for (std::size_t u = 0; u < order; ++u) {
        const std::size_t ua = mul(u, a);
        for (std::size_t w = 0; w < order; ++w) {
          const std::size_t lhs = mul(ua, w), rhs = mul(u, mul(a, w));
          if (lhs != rhs) record(u, a, w, lhs, rhs);
        }
      }
    }
  }
  report.consistent = report.failures.empty();
  return report;
}

}  // namespace

ConsistencyReport check_consistency(const PcPresentation& pres, ConsistencyMode mode,
                                    std::size_t max_order) {
  return mode == ConsistencyMode::OverlapTests ? overlap_tests(pres)
                                               : full_associativity(pres, max_order);
}

}  // namespace pgw
