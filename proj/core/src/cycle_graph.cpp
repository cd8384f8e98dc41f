#include "orichain/cycle_graph.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace orichain {

CycleMetric::CycleMetric(int n) : n_(n) {
  if (n_ < 3) {
    throw std::domain_error("cycle graph needs at least 3 vertices, got " +
                            std::to_string(n_));
  }
}

int CycleMetric::distance(int x, int y) const {
  const auto check = [this](int v) {
    if (v < 1 || v > n_) {
      throw std::out_of_range("vertex " + std::to_string(v) +
                              " outside cycle [1," + std::to_string(n_) + "]");
    }
  };
  check(x);
  check(y);
  const int around = std::abs(x - y);
  return std::min(around, n_ - around);
}

bool is_partial_isometry(const PTrans& alpha) {
  const CycleMetric metric(alpha.chain_size());
  const std::vector<int> dom = alpha.domain();
  const int k = static_cast<int>(dom.size());
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (metric.distance(dom[i], dom[j]) !=
          metric.distance(alpha[dom[i]], alpha[dom[j]])) {
        return false;
      }
    }
  }
  return true;
}

PTrans normalize_fix1(const PTrans& alpha) {
  if (alpha.is_empty_map()) {
    throw std::domain_error("normalize_fix1 requires a nonempty transformation");
  }
  const int n = alpha.chain_size();
  const int i1 = alpha.domain().front();
  const int j1 = alpha[i1];
  return rotation(n, i1 - 1) * alpha * rotation(n, n - j1 + 1);
}

PTrans reflect_normalize(const PTrans& alpha) {
  const int n = alpha.chain_size();
  return alpha * reflection(n) * rotation(n, 1);
}

}  // namespace orichain
