#pragma once

// Reference implementations used to cross-check the library. They are kept
// deliberately naive and independent of the production code paths: the
// orientation predicates below search for a sorted rotation instead of
// counting descents, and the cardinality helpers evaluate the closed-form
// sums directly.

#include <cstdint>
#include <span>
#include <vector>

#include "orichain/ptrans.hpp"

namespace oritest {

// A word is cyclic exactly when some rotation of it is non-decreasing.
inline bool oracle_cyclic(std::span<const int> values) {
  const int t = static_cast<int>(values.size());
  if (t <= 1) {
    return true;
  }
  for (int r = 0; r < t; ++r) {
    bool sorted = true;
    for (int i = 0; i + 1 < t; ++i) {
      if (values[(r + i) % t] > values[(r + i + 1) % t]) {
        sorted = false;
        break;
      }
    }
    if (sorted) {
      return true;
    }
  }
  return false;
}

// A word is anticyclic exactly when its reversal is cyclic.
inline bool oracle_anticyclic(std::span<const int> values) {
  std::vector<int> reversed(values.rbegin(), values.rend());
  return oracle_cyclic(reversed);
}

inline bool oracle_oriented(std::span<const int> values) {
  return oracle_cyclic(values) || oracle_anticyclic(values);
}

// Image values of a partial map read along its sorted domain.
inline std::vector<int> image_word(const orichain::PTrans& alpha) {
  std::vector<int> word;
  for (int x = 1; x <= alpha.chain_size(); ++x) {
    if (alpha.defined(x)) {
      word.push_back(alpha[x]);
    }
  }
  return word;
}

inline bool oracle_orientation_preserving(const orichain::PTrans& alpha) {
  return oracle_cyclic(image_word(alpha));
}

inline bool oracle_orientation_pre_or_reversing(const orichain::PTrans& alpha) {
  return oracle_oriented(image_word(alpha));
}

inline std::uint64_t oracle_binomial(int n, int k) {
  if (k < 0 || k > n) {
    return 0;
  }
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) /
             static_cast<std::uint64_t>(i);
  }
  return result;
}

inline std::uint64_t oracle_factorial(int n) {
  std::uint64_t result = 1;
  for (int i = 2; i <= n; ++i) {
    result *= static_cast<std::uint64_t>(i);
  }
  return result;
}

// Number of injective partial maps on an n-chain: sum over the common size k
// of the domain and image of C(n,k)^2 * k!.
inline std::uint64_t oracle_injective_universe_size(int n) {
  std::uint64_t total = 0;
  for (int k = 0; k <= n; ++k) {
    total += oracle_binomial(n, k) * oracle_binomial(n, k) * oracle_factorial(k);
  }
  return total;
}

inline std::uint64_t oracle_pow(std::uint64_t base, int exponent) {
  std::uint64_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    result *= base;
  }
  return result;
}

}  // namespace oritest
