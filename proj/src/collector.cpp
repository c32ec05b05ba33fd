#include "pgw/collector.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgw {

namespace {

void append_letters(std::vector<std::uint16_t>& out, const ExponentVector& exps) {
  for (std::size_t k = 0; k < exps.size(); ++k)
    out.insert(out.end(), exps[k], static_cast<std::uint16_t>(k));
}

}  // namespace

Collector::Collector(const PcPresentation& pres)
    : rank_(pres.rank()), prime_(pres.prime()) {
  power_letters_.resize(rank_);
  for (std::size_t i = 0; i < rank_; ++i) append_letters(power_letters_[i], pres.power(i));

  conjugate_letters_.resize(rank_ * (rank_ == 0 ? 0 : rank_ - 1) / 2);
  for (std::size_t j = 1; j < rank_; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      auto& letters = conjugate_letters_[PcPresentation::commutator_slot(j, i)];
      letters.push_back(static_cast<std::uint16_t>(j));
      append_letters(letters, pres.commutator(j, i));
    }
  }
}

std::size_t Collector::run(ExponentVector& acc, Letters& stack) const {
  std::size_t steps = 0;
  Letters pending;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    ++steps;

    bool tail = false;
    for (std::size_t j = i + 1; j < rank_ && !tail; ++j) tail = acc[j] != 0;

    if (!tail) {
      if (++acc[i] == prime_) {
        acc[i] = 0;
        const auto& pw = power_letters_[i];
        stack.insert(stack.end(), pw.rbegin(), pw.rend());
      }
      continue;
    }

    // prefix * tail * g_i = prefix * g_i * tail^{g_i}
    pending.clear();
    pending.push_back(static_cast<std::uint16_t>(i));
    for (std::size_t j = i + 1; j < rank_; ++j) {
      const auto& conj = conjugate_letters_[PcPresentation::commutator_slot(j, i)];
      for (unsigned r = 0; r < acc[j]; ++r) pending.insert(pending.end(), conj.begin(), conj.end());
      acc[j] = 0;
    }
    stack.insert(stack.end(), pending.rbegin(), pending.rend());
  }
  return steps;
}

std::size_t Collector::collect_into(ExponentVector& acc, const Word& w) const {
  if (acc.size() != rank_) throw std::invalid_argument("rank mismatch between element and context");
  Letters stack;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->gen >= rank_) throw std::invalid_argument("word references a generator outside the presentation");
    stack.insert(stack.end(), it->exp, static_cast<std::uint16_t>(it->gen));
  }
  return run(acc, stack);
}

std::size_t Collector::collect_into(ExponentVector& acc,
                                    const ExponentVector& normal) const {
  if (acc.size() != rank_ || normal.size() != rank_)
    throw std::invalid_argument("rank mismatch between element and context");
  Letters stack;
  for (std::size_t k = rank_; k-- > 0;)
    stack.insert(stack.end(), normal[k], static_cast<std::uint16_t>(k));
  return run(acc, stack);
}

ExponentVector Collector::collect(const Word& w) const {
  ExponentVector acc(rank_, 0);
  collect_into(acc, w);
  return acc;
}

ExponentVector Collector::multiply(const ExponentVector& u,
                                   const ExponentVector& v) const {
  ExponentVector acc = u;
  collect_into(acc, v);
  return acc;
}

}  // namespace pgw
