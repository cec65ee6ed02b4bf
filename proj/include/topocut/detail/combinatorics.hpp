#pragma once

#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

namespace topocut::detail {

// Visits every k-subset of {0..n-1} in lexicographic order until fn returns
// false; returns false iff some call returned false.
inline bool for_each_subset(size_t n, size_t k,
                            const std::function<bool(const std::vector<size_t>&)>& fn) {
  if (k > n) return true;
  std::vector<size_t> idx(k);
  std::iota(idx.begin(), idx.end(), size_t{0});
  if (k == 0) return fn(idx);
  while (true) {
    if (!fn(idx)) return false;
    size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - k) break;
      if (i == 0) return true;
    }
    ++idx[i];
    for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Visits every tuple of a mixed-radix odometer (one digit per radix entry,
// digit i < radixes[i]) in lexicographic order until fn returns false.
// Returns true when all radixes are positive and every call returned true;
// yields nothing if any radix is zero.
inline bool for_each_tuple(const std::vector<size_t>& radixes,
                           const std::function<bool(const std::vector<size_t>&)>& fn) {
  for (size_t r : radixes)
    if (r == 0) return true;
  std::vector<size_t> digits(radixes.size(), 0);
  while (true) {
    if (!fn(digits)) return false;
    size_t i = digits.size();
    while (i > 0) {
      --i;
      if (++digits[i] < radixes[i]) break;
      digits[i] = 0;
      if (i == 0) return true;
    }
    if (digits.empty()) return true;
  }
}

}  // namespace topocut::detail
