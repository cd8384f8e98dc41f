#include "orichain/orientation.hpp"

#include <array>
#include <span>
#include <stdexcept>
#include <string>

#include "orichain/cycle_graph.hpp"

namespace orichain {

namespace {

// Wraparound descent/ascent counts on short raw words. These mirror the
// ChainSeq predicates without the construction cost; they sit inside the
// n^3/n^4 tuple loops below.
int word_descents(std::span<const int> w) {
  const std::size_t t = w.size();
  if (t <= 1) return 0;
  int count = 0;
  for (std::size_t i = 0; i < t; ++i) {
    if (w[i] > w[(i + 1) % t]) ++count;
  }
  return count;
}

int word_ascents(std::span<const int> w) {
  const std::size_t t = w.size();
  if (t <= 1) return 0;
  int count = 0;
  for (std::size_t i = 0; i < t; ++i) {
    if (w[i] < w[(i + 1) % t]) ++count;
  }
  return count;
}

bool word_cyclic(std::span<const int> w) { return word_descents(w) <= 1; }
bool word_anticyclic(std::span<const int> w) { return word_ascents(w) <= 1; }
bool word_oriented(std::span<const int> w) {
  return word_cyclic(w) || word_anticyclic(w);
}

void require_full(const PTrans& alpha, const char* what) {
  if (!alpha.is_full()) {
    throw std::domain_error(std::string(what) +
                            " requires a full transformation");
  }
}

void check_tuple_width(int w) {
  if (w != 3 && w != 4) {
    throw std::invalid_argument("tuple width must be 3 or 4, got " +
                                std::to_string(w));
  }
}

}  // namespace

ChainSeq image_sequence(const PTrans& alpha) {
  const int n = alpha.chain_size();
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    if (alpha.defined(x)) values.push_back(alpha[x]);
  }
  return {std::max(n, 1), std::move(values)};
}

OrientationClass classify(const PTrans& alpha) {
  const ChainSeq s = image_sequence(alpha);
  return {is_cyclic(s), is_anticyclic(s)};
}

bool is_member(const PTrans& alpha, MonoidLabel label) {
  switch (label) {
    case MonoidLabel::PT:
      return true;
    case MonoidLabel::T:
      return alpha.is_full();
    case MonoidLabel::I:
      return alpha.is_injective();
    case MonoidLabel::S:
      return alpha.is_permutation();
    case MonoidLabel::OP:
      return alpha.is_full() && classify(alpha).cyclic;
    case MonoidLabel::OR:
      return alpha.is_full() && classify(alpha).oriented();
    case MonoidLabel::POP:
      return classify(alpha).cyclic;
    case MonoidLabel::POR:
      return classify(alpha).oriented();
    case MonoidLabel::POPI:
      return alpha.is_injective() && classify(alpha).cyclic;
    case MonoidLabel::PORI:
      return alpha.is_injective() && classify(alpha).oriented();
    case MonoidLabel::DPC:
      return is_partial_isometry(alpha);
    case MonoidLabel::C:
      // A permutation with a cyclic image sequence is exactly a rotation.
      return alpha.is_permutation() && classify(alpha).cyclic;
    case MonoidLabel::D:
      // Rotations and reflected rotations: the oriented permutations.
      return alpha.is_permutation() && classify(alpha).oriented();
  }
  throw std::invalid_argument("unknown monoid label");
}

bool hv_triple_test(const PTrans& alpha) {
  require_full(alpha, "hv_triple_test");
  const int n = alpha.chain_size();
  std::array<int, 3> t{};
  std::array<int, 3> u{};
  for (t[0] = 1; t[0] <= n; ++t[0]) {
    for (t[1] = 1; t[1] <= n; ++t[1]) {
      for (t[2] = 1; t[2] <= n; ++t[2]) {
        for (int i = 0; i < 3; ++i) u[i] = alpha[t[i]];
        const bool both_cyclic = word_cyclic(t) && word_cyclic(u);
        const bool both_anticyclic = word_anticyclic(t) && word_anticyclic(u);
        if (!both_cyclic && !both_anticyclic) return false;
      }
    }
  }
  return true;
}

bool hv_quadruple_test(const PTrans& alpha) {
  require_full(alpha, "hv_quadruple_test");
  const int n = alpha.chain_size();
  std::array<int, 4> t{};
  std::array<int, 4> u{};
  for (t[0] = 1; t[0] <= n; ++t[0]) {
    for (t[1] = 1; t[1] <= n; ++t[1]) {
      for (t[2] = 1; t[2] <= n; ++t[2]) {
        for (t[3] = 1; t[3] <= n; ++t[3]) {
          if (!word_oriented(t)) continue;
          for (int i = 0; i < 4; ++i) u[i] = alpha[t[i]];
          if (!word_oriented(u)) return false;
        }
      }
    }
  }
  return true;
}

bool cyclic_triple_test(const PTrans& alpha) {
  require_full(alpha, "cyclic_triple_test");
  const int n = alpha.chain_size();
  std::array<int, 3> t{};
  std::array<int, 3> u{};
  for (t[0] = 1; t[0] <= n; ++t[0]) {
    for (t[1] = 1; t[1] <= n; ++t[1]) {
      for (t[2] = 1; t[2] <= n; ++t[2]) {
        if (!word_cyclic(t)) continue;
        for (int i = 0; i < 3; ++i) u[i] = alpha[t[i]];
        if (!word_cyclic(u)) return false;
      }
    }
  }
  return true;
}

bool nondecreasing_tuple_test(const PTrans& alpha, int w) {
  check_tuple_width(w);
  require_full(alpha, "nondecreasing_tuple_test");
  const int n = alpha.chain_size();
  std::array<int, 4> u{};
  if (w == 3) {
    for (int a1 = 1; a1 <= n; ++a1) {
      for (int a2 = a1; a2 <= n; ++a2) {
        for (int a3 = a2; a3 <= n; ++a3) {
          u = {alpha[a1], alpha[a2], alpha[a3], 0};
          if (!word_cyclic(std::span<const int>(u.data(), 3))) return false;
        }
      }
    }
    return true;
  }
  for (int a1 = 1; a1 <= n; ++a1) {
    for (int a2 = a1; a2 <= n; ++a2) {
      for (int a3 = a2; a3 <= n; ++a3) {
        for (int a4 = a3; a4 <= n; ++a4) {
          u = {alpha[a1], alpha[a2], alpha[a3], alpha[a4]};
          if (!word_oriented(u)) return false;
        }
      }
    }
  }
  return true;
}

bool local_width_test(const PTrans& alpha, int w) {
  check_tuple_width(w);
  const bool found_bad = restrictions_of_width(
      alpha, w, [w](const PTrans& beta) {
        const OrientationClass c = classify(beta);
        return w == 3 ? !c.cyclic : !c.oriented();
      });
  return !found_bad;
}

bool rank2_pop_test(const PTrans& alpha) {
  if (alpha.rank() != 2) {
    throw std::domain_error("rank2_pop_test requires rank 2, got rank " +
                            std::to_string(alpha.rank()));
  }
  // One kernel class is a contiguous block of the domain enumeration iff the
  // image word over the sorted domain, read cyclically, switches value
  // exactly twice. (It cannot switch zero times: both values occur.)
  const std::vector<int> dom = alpha.domain();
  const int k = static_cast<int>(dom.size());
  int switches = 0;
  for (int j = 0; j < k; ++j) {
    if (alpha[dom[j]] != alpha[dom[(j + 1) % k]]) ++switches;
  }
  return switches <= 2;
}

bool decide_pop_local(const PTrans& alpha) {
  const int r = alpha.rank();
  if (r <= 1) return true;
  if (r == 2) return rank2_pop_test(alpha);
  return local_width_test(alpha, 3);
}

bool decide_por_local(const PTrans& alpha) {
  return local_width_test(alpha, 4);
}

PTrans bar_extend(const PTrans& alpha) {
  const std::vector<int> dom = alpha.domain();
  const int k = static_cast<int>(dom.size());
  if (k < 3) {
    throw std::domain_error("bar_extend requires width >= 3, got width " +
                            std::to_string(k));
  }
  const int n = alpha.chain_size();
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  const auto fill = [&img](int lo, int hi, int value) {
    for (int i = lo; i <= hi; ++i) img[i - 1] = value;
  };
  // The first domain point's value covers everything left of the second
  // domain point; each later value is carried rightward to the next one.
  fill(1, dom[1] - 1, alpha[dom[0]]);
  for (int l = 1; l + 1 < k; ++l) fill(dom[l], dom[l + 1] - 1, alpha[dom[l]]);
  fill(dom[k - 1], n, alpha[dom[k - 1]]);
  return PTrans::full_map(n, std::move(img));
}

}  // namespace orichain
