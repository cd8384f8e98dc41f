#include "orichain/cycle_graph.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "orichain/census.hpp"
#include "orichain/orientation.hpp"
#include "orichain/ptrans.hpp"

using orichain::CycleMetric;
using orichain::is_partial_isometry;
using orichain::MonoidLabel;
using orichain::PTrans;

TEST_CASE("cycle distances on known pairs") {
  const CycleMetric m(6);
  CHECK(m.vertex_count() == 6);
  CHECK(m.distance(1, 4) == 3);
  CHECK(m.distance(2, 6) == 2);
  CHECK(m.distance(1, 2) == 1);
  CHECK(m.distance(6, 1) == 1);
  CHECK(m.distance(3, 3) == 0);

  CHECK(CycleMetric(3).distance(1, 3) == 1);
  CHECK(CycleMetric(7).distance(1, 5) == 3);
}

TEST_CASE("cycle metric validation") {
  CHECK_THROWS_AS(CycleMetric(2), std::domain_error);
  CHECK_THROWS_AS(CycleMetric(0), std::domain_error);
  CHECK_THROWS_AS(CycleMetric(-3), std::domain_error);
  const CycleMetric m(5);
  CHECK_THROWS_AS(m.distance(0, 1), std::out_of_range);
  CHECK_THROWS_AS(m.distance(1, 6), std::out_of_range);
}

TEST_CASE("cycle distance is a metric bounded by half the girth") {
  for (int n = 3; n <= 16; ++n) {
    const CycleMetric m(n);
    for (int x = 1; x <= n; ++x) {
      for (int y = 1; y <= n; ++y) {
        const int d = m.distance(x, y);
        CHECK(d == m.distance(y, x));
        CHECK((d == 0) == (x == y));
        CHECK(d >= 0);
        CHECK(2 * d <= n);
        // Adjacent vertices on the ring are at distance one.
        if (std::abs(x - y) == 1 || std::abs(x - y) == n - 1) {
          CHECK(d == 1);
        }
        for (int z = 1; z <= n; ++z) {
          CHECK(d <= m.distance(x, z) + m.distance(z, y));
        }
      }
    }
  }
}

TEST_CASE("partial isometries of the cycle") {
  CHECK(is_partial_isometry(orichain::rotation(6, 2)));
  CHECK(is_partial_isometry(orichain::reflection(6)));
  CHECK(is_partial_isometry(PTrans::empty_map(6)));
  CHECK(is_partial_isometry(PTrans::make(6, {{2, 5}})));
  CHECK(is_partial_isometry(PTrans::identity(6)));
  CHECK_FALSE(is_partial_isometry(PTrans::make(6, {{1, 1}, {2, 4}})));
  CHECK_FALSE(is_partial_isometry(PTrans::make(5, {{1, 2}, {3, 5}, {4, 1}})));
  // Distance preservation forces injectivity, so constants of width >= 2
  // never qualify.
  CHECK_FALSE(is_partial_isometry(PTrans::full_map(6, {3, 3, 3, 3, 3, 3})));
  CHECK_THROWS_AS(is_partial_isometry(PTrans::identity(2)), std::domain_error);
}

TEST_CASE("cycle isometries form an inverse submonoid") {
  for (int n = 4; n <= 5; ++n) {
    const std::vector<PTrans> isometries = orichain::enumerate_dpc_all(n);
    const std::set<PTrans> pool(isometries.begin(), isometries.end());
    for (const PTrans& alpha : isometries) {
      CHECK(alpha.is_injective());
      CHECK(is_partial_isometry(alpha));
      CHECK(pool.count(alpha.inverse()) == 1);
      // Restrictions drop domain pairs, so they stay distance-preserving.
      for (int w = 1; w < alpha.width(); ++w) {
        for (const PTrans& beta : orichain::restrictions_of_width(alpha, w)) {
          CHECK(pool.count(beta) == 1);
        }
      }
    }
    for (const PTrans& alpha : isometries) {
      for (const PTrans& beta : isometries) {
        CHECK(pool.count(alpha * beta) == 1);
      }
    }
  }
}

TEST_CASE("rotating a transformation to fix vertex one") {
  CHECK(orichain::normalize_fix1(PTrans::make(6, {{3, 5}, {4, 6}})) ==
        PTrans::make(6, {{1, 1}, {2, 2}}));
  CHECK(orichain::normalize_fix1(orichain::rotation(5, 2)) ==
        PTrans::identity(5));
  CHECK_THROWS_AS(orichain::normalize_fix1(PTrans::empty_map(4)),
                  std::domain_error);

  for (int n = 4; n <= 5; ++n) {
    for (const PTrans& alpha : orichain::enumerate_dpc_all(n)) {
      if (alpha.is_empty_map()) {
        continue;
      }
      const PTrans delta = orichain::normalize_fix1(alpha);
      CHECK(delta.defined(1));
      CHECK(delta[1] == 1);
      CHECK(delta.width() == alpha.width());
      CHECK(is_partial_isometry(delta));
      CHECK(orichain::is_member(delta, MonoidLabel::PORI) ==
            orichain::is_member(alpha, MonoidLabel::PORI));
      CHECK(orichain::is_member(delta, MonoidLabel::POPI) ==
            orichain::is_member(alpha, MonoidLabel::POPI));
    }
  }
}

TEST_CASE("reflecting a transformation swaps its orientation classes") {
  // The identity reflects to the vertex-one-fixing reflection of the ring.
  CHECK(orichain::reflect_normalize(PTrans::identity(5)) ==
        PTrans::full_map(5, {1, 5, 4, 3, 2}));

  // Applying the reflection twice restores the original transformation.
  std::vector<int> img(4, 0);
  while (true) {
    const PTrans alpha = PTrans::from_image_vector(4, img);
    CHECK(orichain::reflect_normalize(orichain::reflect_normalize(alpha)) ==
          alpha);
    int pos = 3;
    while (pos >= 0 && img[static_cast<std::size_t>(pos)] == 4) {
      img[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) {
      break;
    }
    ++img[static_cast<std::size_t>(pos)];
  }

  for (int n = 4; n <= 5; ++n) {
    for (const PTrans& alpha : orichain::enumerate_all(
             orichain::Universe::injective, n)) {
      const PTrans mirror = orichain::reflect_normalize(alpha);
      const auto before = orichain::classify(alpha);
      const auto after = orichain::classify(mirror);
      CHECK(after.cyclic == before.anticyclic);
      CHECK(after.anticyclic == before.cyclic);
      CHECK(is_partial_isometry(mirror) == is_partial_isometry(alpha));
    }
  }
}
