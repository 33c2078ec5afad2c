#ifndef RECONKIT_COMBINATORICS_HPP
#define RECONKIT_COMBINATORICS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace reconkit {

/// C(n, k), saturating at the largest uint64 value.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t factor = n - k + i;
    // r * factor / i is exact because r * factor = C(n-k+i, i) * i.
    if (r > std::numeric_limits<std::uint64_t>::max() / factor) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r = r * factor / i;
  }
  return r;
}

/// Visits every k-subset of {0, ..., n-1} in lexicographic order as a sorted index span.
/// `f` returns false to stop; the function then returns false.
template <class F>
bool for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) {
    return true;
  }
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) {
    idx[i] = i;
  }
  for (;;) {
    if (!f(std::span<const std::size_t>(idx))) {
      return false;
    }
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) {
      --i;
    }
    if (i == 0) {
      return true;
    }
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) {
      idx[j] = idx[j - 1] + 1;
    }
  }
}

}  // namespace reconkit

#endif  // RECONKIT_COMBINATORICS_HPP
