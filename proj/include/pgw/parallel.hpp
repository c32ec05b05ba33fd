#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace pgw {

/// Worker threads used by the pairwise scans and searches; 1 by default.
unsigned worker_count();
void set_worker_count(unsigned n);

/// Least i in [0, n) with pred(i), evaluated across worker_count() threads.
/// The result does not depend on the number of workers.
std::optional<std::size_t> parallel_find_first(std::size_t n,
                                               const std::function<bool(std::size_t)>& pred);

inline bool parallel_all_of(std::size_t n, const std::function<bool(std::size_t)>& pred) {
  return !parallel_find_first(n, [&](std::size_t i) { return !pred(i); });
}

}  // namespace pgw
