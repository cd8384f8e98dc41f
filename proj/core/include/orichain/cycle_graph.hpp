#pragma once

#include "orichain/ptrans.hpp"

namespace orichain {

// Geodesic distance on the cycle graph with vertex set {1, ..., n}. A cycle
// needs at least three vertices; the constructor rejects smaller n.
class CycleMetric {
public:
  explicit CycleMetric(int n);

  int vertex_count() const { return n_; }

  // min(|x - y|, n - |x - y|); always in [0, n/2].
  int distance(int x, int y) const;

private:
  int n_;
};

// True iff alpha preserves cycle-graph distance on every pair of its domain
// points. Such maps are automatically injective (distinct points are at
// positive distance). Requires chain size >= 3.
bool is_partial_isometry(const PTrans& alpha);

// g^{i1-1} . alpha . g^{n-j1+1}, where i1 = min Dom(alpha) and j1 = i1 alpha.
// The result is defined at 1 and fixes 1; pre- and post-rotating preserves
// both distance-preservation and orientation-class membership. Requires a
// nonempty transformation.
PTrans normalize_fix1(const PTrans& alpha);

// alpha . h . g. Since h g has order two, applying this twice returns alpha;
// for injective alpha it swaps the cyclic and anti-cyclic classes while
// preserving distance-preservation.
PTrans reflect_normalize(const PTrans& alpha);

}  // namespace orichain
