#include "orichain/census.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"
#include "orichain/chain_seq.hpp"
#include "orichain/cycle_graph.hpp"
#include "orichain/orientation.hpp"

namespace orichain {

namespace {

using Sink = std::function<bool(const PTrans&)>;

void check_positive_n(int n) {
  if (n < 1) {
    throw std::invalid_argument("chain size must be positive, got " +
                                std::to_string(n));
  }
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t result = 1;
  for (int i = 0; i < exp; ++i) result *= base;
  return result;
}

std::uint64_t binomial_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) /
             static_cast<std::uint64_t>(i);
  }
  return result;
}

std::uint64_t factorial_u64(int n) {
  std::uint64_t result = 1;
  for (int i = 2; i <= n; ++i) result *= static_cast<std::uint64_t>(i);
  return result;
}

// Odometer over dense image vectors with entries in [lo, n]; lo = 1 streams
// the full transformations, lo = 0 the partial ones. Lexicographic ascent
// equals increasing PTrans order.
bool enumerate_dense(int n, int lo, const Sink& sink) {
  std::vector<int> img(static_cast<std::size_t>(n), lo);
  while (true) {
    if (sink(PTrans::from_image_vector(n, img))) return true;
    int pos = n - 1;
    while (pos >= 0 && img[pos] == n) {
      img[pos] = lo;
      --pos;
    }
    if (pos < 0) return false;
    ++img[pos];
  }
}

bool enumerate_injective_universe(int n, const Sink& sink) {
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> dom;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) dom.push_back(i + 1);
    }
    const int k = static_cast<int>(dom.size());
    std::vector<std::pair<int, int>> pairs(static_cast<std::size_t>(k));
    unsigned used = 0;
    const auto extend = [&](auto&& self, int pos) -> bool {
      if (pos == k) return sink(PTrans::make(n, pairs));
      for (int y = 1; y <= n; ++y) {
        const unsigned bit = 1u << (y - 1);
        if (used & bit) continue;
        pairs[static_cast<std::size_t>(pos)] = {dom[static_cast<std::size_t>(pos)], y};
        used |= bit;
        if (self(self, pos + 1)) return true;
        used &= ~bit;
      }
      return false;
    };
    if (extend(extend, 0)) return true;
  }
  return false;
}

}  // namespace

std::string_view to_string(Universe u) {
  switch (u) {
    case Universe::full: return "full";
    case Universe::partial: return "partial";
    case Universe::injective: return "injective";
  }
  return "?";
}

int EnumerationBounds::limit_for(Universe u) const {
  switch (u) {
    case Universe::full: return full;
    case Universe::partial: return partial;
    case Universe::injective: return injective;
  }
  throw std::invalid_argument("unknown universe");
}

std::uint64_t universe_size(Universe u, int n) {
  check_positive_n(n);
  if (n > 15) {
    throw std::out_of_range("universe size is only representable up to n = 15"
                            ", got " + std::to_string(n));
  }
  switch (u) {
    case Universe::full:
      return pow_u64(static_cast<std::uint64_t>(n), n);
    case Universe::partial:
      return pow_u64(static_cast<std::uint64_t>(n) + 1, n);
    case Universe::injective: {
      std::uint64_t total = 0;
      for (int k = 0; k <= n; ++k) {
        const std::uint64_t ways = binomial_u64(n, k);
        total += ways * ways * factorial_u64(k);
      }
      return total;
    }
  }
  throw std::invalid_argument("unknown universe");
}

Universe census_universe(MonoidLabel label) {
  switch (label) {
    case MonoidLabel::PT:
    case MonoidLabel::POP:
    case MonoidLabel::POR:
      return Universe::partial;
    case MonoidLabel::T:
    case MonoidLabel::S:
    case MonoidLabel::OP:
    case MonoidLabel::OR:
    case MonoidLabel::C:
    case MonoidLabel::D:
      return Universe::full;
    case MonoidLabel::I:
    case MonoidLabel::POPI:
    case MonoidLabel::PORI:
      return Universe::injective;
    case MonoidLabel::DPC:
      break;
  }
  throw std::invalid_argument("label " + std::string(to_string(label)) +
                              " has no enumeration universe; it is enumerated "
                              "directly");
}

bool enumerate(Universe u, int n, const Sink& sink,
               const EnumerationBounds& bounds) {
  check_positive_n(n);
  const int limit = bounds.limit_for(u);
  if (n > limit) {
    throw std::out_of_range("enumeration of the " +
                            std::string(to_string(u)) +
                            " universe is bounded at n = " +
                            std::to_string(limit) + ", got " +
                            std::to_string(n));
  }
  switch (u) {
    case Universe::full:
      return enumerate_dense(n, 1, sink);
    case Universe::partial:
      return enumerate_dense(n, 0, sink);
    case Universe::injective:
      return enumerate_injective_universe(n, sink);
  }
  throw std::invalid_argument("unknown universe");
}

std::vector<PTrans> enumerate_all(Universe u, int n,
                                  const EnumerationBounds& bounds) {
  std::vector<PTrans> out;
  enumerate(u, n, [&out](const PTrans& alpha) {
    out.push_back(alpha);
    return false;
  }, bounds);
  return out;
}

bool enumerate_dpc(int n, const Sink& sink, const EnumerationBounds& bounds) {
  if (n < 3) {
    throw std::domain_error("cycle-graph enumeration needs n >= 3, got " +
                            std::to_string(n));
  }
  if (n > bounds.isometry) {
    throw std::out_of_range("cycle-graph enumeration is bounded at n = " +
                            std::to_string(bounds.isometry) + ", got " +
                            std::to_string(n));
  }
  const CycleMetric metric(n);
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  std::vector<int> defined_points;
  const auto extend = [&](auto&& self, int x) -> bool {
    if (x > n) return sink(PTrans::from_image_vector(n, img));
    // Leaving x undefined sorts before any image value, so this branch
    // comes first to keep the stream in increasing PTrans order.
    if (self(self, x + 1)) return true;
    for (int y = 1; y <= n; ++y) {
      bool consistent = true;
      for (int p : defined_points) {
        if (metric.distance(p, x) != metric.distance(img[p - 1], y)) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      img[x - 1] = y;
      defined_points.push_back(x);
      const bool stopped = self(self, x + 1);
      defined_points.pop_back();
      img[x - 1] = 0;
      if (stopped) return true;
    }
    return false;
  };
  return extend(extend, 1);
}

std::vector<PTrans> enumerate_dpc_all(int n, const EnumerationBounds& bounds) {
  std::vector<PTrans> out;
  enumerate_dpc(n, [&out](const PTrans& alpha) {
    out.push_back(alpha);
    return false;
  }, bounds);
  return out;
}

CensusRecord count_members(int n, MonoidLabel label,
                           const EnumerationBounds& bounds) {
  std::uint64_t count = 0;
  if (label == MonoidLabel::DPC) {
    enumerate_dpc(n, [&count](const PTrans&) {
      ++count;
      return false;
    }, bounds);
  } else {
    enumerate(census_universe(label), n, [&count, label](const PTrans& alpha) {
      if (is_member(alpha, label)) ++count;
      return false;
    }, bounds);
  }
  return {n, label, count};
}

std::string census_csv(std::span<const CensusRecord> records) {
  std::string out = "n,label,count\n";
  for (const CensusRecord& record : records) {
    out += std::to_string(record.n);
    out += ',';
    out += to_string(record.label);
    out += ',';
    out += std::to_string(record.count);
    out += '\n';
  }
  return out;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["theorem_id"] = report.theorem_id;
  j["n"] = report.n;
  j["instances_checked"] = report.instances_checked;
  j["mismatches"] = report.mismatches;
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
  for (const PTrans& w : report.witnesses) witnesses.push_back(to_text(w));
  j["witnesses"] = std::move(witnesses);
  return j.dump(2);
}

namespace {

constexpr TheoremInfo kCatalog[] = {
    {"T-HV-OP",
     "triple test matches orientation-preservation on full maps of rank other "
     "than 2",
     1, 5},
    {"T-HV-OR", "oriented-quadruple test matches orientedness on all full maps",
     1, 5},
    {"T-W3-OP",
     "width-3 local test matches orientation-preservation on full maps of "
     "rank other than 2",
     1, 5},
    {"T-W4-OR", "width-4 local test matches orientedness on all full maps", 1,
     5},
    {"T-W3-POP",
     "local decision procedure matches orientation-preservation on all "
     "partial maps",
     1, 5},
    {"T-W4-POR", "width-4 local test matches orientedness on all partial maps",
     1, 5},
    {"T-W3-POPI",
     "width-3 local test matches orientation-preservation on all partial "
     "permutations",
     1, 6},
    {"T-W4-PORI",
     "width-4 local test matches orientedness on all partial permutations", 1,
     6},
    {"T-BAR",
     "right-constant extension to a full map preserves the orientation "
     "classes of width >= 3 partial maps",
     3, 5},
    {"T-RANK2",
     "contiguous-kernel-block test matches orientation-preservation on rank-2 "
     "maps",
     2, 5},
    {"T-DPC",
     "every cycle-graph partial isometry is an oriented partial permutation",
     3, 8},
    {"T-UNITS",
     "unit groups of the oriented monoids are the rotation and dihedral "
     "groups",
     1, 5},
    {"T-SEQ-ACT",
     "rotations preserve and reflections swap the orientation classes of "
     "sequences",
     1, 5},
    {"T-HV-OP-UNCORRECTED",
     "triple test matches orientation-preservation on all full maps (known "
     "false at rank 2)",
     1, 5},
    {"T-W3-OP-UNCORRECTED",
     "width-3 local test matches orientation-preservation on all full maps "
     "(known false at rank 2)",
     1, 5},
    {"T-W3-POP-UNCORRECTED",
     "width-3 local test matches orientation-preservation on all partial maps "
     "(known false at rank 2)",
     1, 5},
};

using Source = std::function<bool(const Sink&)>;
using ElementPredicate = std::function<bool(const PTrans&)>;

// Streams the source once per worker, keeping every jobs-th element, and
// merges the slices back in stream order. With any number of workers the
// result is identical to a sequential scan: counts are sums, and the i-th
// global mismatch is within the first i mismatches of its own slice, so
// sorting the collected (ordinal, witness) pairs and truncating reproduces
// the sequential witness list exactly. Predicates must be pure: they are
// invoked concurrently.
VerificationReport run_scan(const TheoremInfo& info, int n,
                            const VerifyOptions& options, const Source& source,
                            const ElementPredicate& filter,
                            const ElementPredicate& holds) {
  const int jobs = std::clamp(options.jobs, 1, 64);
  const std::size_t cap =
      options.witness_cap < 0 ? 0 : static_cast<std::size_t>(options.witness_cap);

  struct Slice {
    std::uint64_t instances = 0;
    std::uint64_t mismatches = 0;
    std::vector<std::pair<std::uint64_t, PTrans>> witnesses;
  };

  const auto scan_slice = [&source, &filter, &holds, jobs, cap](int worker) {
    Slice out;
    std::uint64_t ordinal = 0;
    source([&](const PTrans& alpha) {
      const std::uint64_t index = ordinal++;
      if (jobs > 1 &&
          index % static_cast<std::uint64_t>(jobs) !=
              static_cast<std::uint64_t>(worker)) {
        return false;
      }
      if (filter && !filter(alpha)) return false;
      ++out.instances;
      if (!holds(alpha)) {
        ++out.mismatches;
        if (out.witnesses.size() < cap) out.witnesses.emplace_back(index, alpha);
      }
      return false;
    });
    return out;
  };

  std::vector<Slice> slices;
  if (jobs == 1) {
    slices.push_back(scan_slice(0));
  } else {
    std::vector<std::future<Slice>> futures;
    futures.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
      futures.push_back(std::async(std::launch::async, scan_slice, w));
    }
    for (auto& f : futures) slices.push_back(f.get());
  }

  VerificationReport report{std::string(info.id), n};
  std::vector<std::pair<std::uint64_t, PTrans>> merged;
  for (Slice& slice : slices) {
    report.instances_checked += slice.instances;
    report.mismatches += slice.mismatches;
    for (auto& entry : slice.witnesses) merged.push_back(std::move(entry));
  }
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (merged.size() > cap) merged.resize(cap);
  report.witnesses.reserve(merged.size());
  for (auto& entry : merged) report.witnesses.push_back(std::move(entry.second));
  return report;
}

VerificationReport run_units(const TheoremInfo& info, int n,
                             const VerifyOptions& options) {
  if (n > options.bounds.full) {
    throw std::out_of_range("unit-group check is bounded at n = " +
                            std::to_string(options.bounds.full) + ", got " +
                            std::to_string(n));
  }
  VerificationReport report{std::string(info.id), n};
  const std::size_t cap =
      options.witness_cap < 0 ? 0 : static_cast<std::size_t>(options.witness_cap);

  std::vector<PTrans> rotations;
  for (int k = 0; k < n; ++k) rotations.push_back(rotation(n, k));
  const std::vector<PTrans> dihedral = dihedral_elements(n);

  const std::array<std::pair<MonoidLabel, const std::vector<PTrans>*>, 6>
      expectations = {{{MonoidLabel::OP, &rotations},
                       {MonoidLabel::POP, &rotations},
                       {MonoidLabel::POPI, &rotations},
                       {MonoidLabel::OR, &dihedral},
                       {MonoidLabel::POR, &dihedral},
                       {MonoidLabel::PORI, &dihedral}}};

  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  do {
    const PTrans sigma = PTrans::full_map(n, img);
    const PTrans sigma_inv = sigma.inverse();
    for (const auto& [label, expected] : expectations) {
      const bool unit =
          is_member(sigma, label) && is_member(sigma_inv, label);
      const bool should_be_unit =
          std::find(expected->begin(), expected->end(), sigma) !=
          expected->end();
      ++report.instances_checked;
      if (unit != should_be_unit) {
        ++report.mismatches;
        if (report.witnesses.size() < cap) report.witnesses.push_back(sigma);
      }
    }
  } while (std::next_permutation(img.begin(), img.end()));
  return report;
}

VerificationReport run_sequence_action(const TheoremInfo& info, int n,
                                       const VerifyOptions& options) {
  if (n > options.bounds.full) {
    throw std::out_of_range("sequence-action check is bounded at n = " +
                            std::to_string(options.bounds.full) + ", got " +
                            std::to_string(n));
  }
  VerificationReport report{std::string(info.id), n};
  const std::size_t cap =
      options.witness_cap < 0 ? 0 : static_cast<std::size_t>(options.witness_cap);

  for (int t = 3; t <= 5; ++t) {
    const std::vector<DihedralElement> sigmas = DihedralElement::all(t);
    std::vector<int> vals(static_cast<std::size_t>(t), 1);
    while (true) {
      const ChainSeq s(n, vals);
      const bool cyc = is_cyclic(s);
      const bool anti = is_anticyclic(s);
      const bool oriented = cyc || anti;

      bool rotations_all_cyclic = true;
      bool rotations_all_anticyclic = true;
      bool reflections_all_cyclic = true;
      bool reflections_all_anticyclic = true;
      bool all_oriented = true;
      bool some_rotation_sorts = false;
      bool some_reflection_sorts = false;
      for (const DihedralElement& sigma : sigmas) {
        const ChainSeq moved = act(sigma, s);
        const bool mc = is_cyclic(moved);
        const bool ma = is_anticyclic(moved);
        const bool sorted =
            std::is_sorted(moved.values().begin(), moved.values().end());
        if (sigma.reflected()) {
          reflections_all_cyclic = reflections_all_cyclic && mc;
          reflections_all_anticyclic = reflections_all_anticyclic && ma;
          some_reflection_sorts = some_reflection_sorts || sorted;
        } else {
          rotations_all_cyclic = rotations_all_cyclic && mc;
          rotations_all_anticyclic = rotations_all_anticyclic && ma;
          some_rotation_sorts = some_rotation_sorts || sorted;
        }
        all_oriented = all_oriented && (mc || ma);
      }

      const bool rotations_preserve =
          cyc == rotations_all_cyclic && anti == rotations_all_anticyclic;
      const bool reflections_swap =
          cyc == reflections_all_anticyclic && anti == reflections_all_cyclic;
      const bool orientedness_stable = oriented == all_oriented;
      const bool sortable = cyc == some_rotation_sorts &&
                            anti == some_reflection_sorts &&
                            oriented ==
                                (some_rotation_sorts || some_reflection_sorts);

      ++report.instances_checked;
      if (!(rotations_preserve && reflections_swap && orientedness_stable &&
            sortable)) {
        ++report.mismatches;
        if (report.witnesses.size() < cap) {
          std::vector<std::pair<int, int>> pairs;
          for (int i = 0; i < t; ++i) {
            pairs.emplace_back(i + 1, vals[static_cast<std::size_t>(i)]);
          }
          report.witnesses.push_back(PTrans::make(std::max(n, t), pairs));
        }
      }

      int pos = t - 1;
      while (pos >= 0 && vals[static_cast<std::size_t>(pos)] == n) {
        vals[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++vals[static_cast<std::size_t>(pos)];
    }
  }
  return report;
}

}  // namespace

std::span<const TheoremInfo> theorem_catalog() { return kCatalog; }

const TheoremInfo* find_theorem(std::string_view theorem_id) {
  for (const TheoremInfo& info : kCatalog) {
    if (info.id == theorem_id) return &info;
  }
  return nullptr;
}

VerificationReport verify_theorem(std::string_view theorem_id, int n,
                                  const VerifyOptions& options) {
  const TheoremInfo* info = find_theorem(theorem_id);
  if (info == nullptr) {
    throw std::invalid_argument("unknown theorem id '" +
                                std::string(theorem_id) + "'");
  }
  if (n < info->min_n) {
    throw std::out_of_range("theorem " + std::string(theorem_id) +
                            " requires n >= " + std::to_string(info->min_n) +
                            ", got " + std::to_string(n));
  }

  const auto universe_source = [n, &options](Universe u) {
    return Source([u, n, &options](const Sink& sink) {
      return enumerate(u, n, sink, options.bounds);
    });
  };
  const Source isometry_source = [n, &options](const Sink& sink) {
    return enumerate_dpc(n, sink, options.bounds);
  };

  const ElementPredicate no_filter;
  const ElementPredicate rank_not_2 = [](const PTrans& a) {
    return a.rank() != 2;
  };
  const ElementPredicate rank_is_2 = [](const PTrans& a) {
    return a.rank() == 2;
  };
  const ElementPredicate width_at_least_3 = [](const PTrans& a) {
    return a.width() >= 3;
  };

  const std::string_view id = info->id;
  if (id == "T-HV-OP") {
    return run_scan(*info, n, options, universe_source(Universe::full),
                    rank_not_2, [](const PTrans& a) {
                      return hv_triple_test(a) ==
                             is_member(a, MonoidLabel::OP);
                    });
  }
  if (id == "T-HV-OR") {
    return run_scan(*info, n, options, universe_source(Universe::full),
                    no_filter, [](const PTrans& a) {
                      return hv_quadruple_test(a) ==
                             is_member(a, MonoidLabel::OR);
                    });
  }
  if (id == "T-W3-OP") {
    return run_scan(*info, n, options, universe_source(Universe::full),
                    rank_not_2, [](const PTrans& a) {
                      return local_width_test(a, 3) ==
                             is_member(a, MonoidLabel::OP);
                    });
  }
  if (id == "T-W4-OR") {
    return run_scan(*info, n, options, universe_source(Universe::full),
                    no_filter, [](const PTrans& a) {
                      return local_width_test(a, 4) ==
                             is_member(a, MonoidLabel::OR);
                    });
  }
  if (id == "T-W3-POP") {
    return run_scan(*info, n, options, universe_source(Universe::partial),
                    no_filter, [](const PTrans& a) {
                      return decide_pop_local(a) ==
                             is_member(a, MonoidLabel::POP);
                    });
  }
  if (id == "T-W4-POR") {
    return run_scan(*info, n, options, universe_source(Universe::partial),
                    no_filter, [](const PTrans& a) {
                      return decide_por_local(a) ==
                             is_member(a, MonoidLabel::POR);
                    });
  }
  if (id == "T-W3-POPI") {
    return run_scan(*info, n, options, universe_source(Universe::injective),
                    no_filter, [](const PTrans& a) {
                      return local_width_test(a, 3) ==
                             is_member(a, MonoidLabel::POPI);
                    });
  }
  if (id == "T-W4-PORI") {
    return run_scan(*info, n, options, universe_source(Universe::injective),
                    no_filter, [](const PTrans& a) {
                      return local_width_test(a, 4) ==
                             is_member(a, MonoidLabel::PORI);
                    });
  }
  if (id == "T-BAR") {
    return run_scan(*info, n, options, universe_source(Universe::partial),
                    width_at_least_3, [](const PTrans& a) {
                      const PTrans bar = bar_extend(a);
                      return is_member(a, MonoidLabel::POP) ==
                                 is_member(bar, MonoidLabel::OP) &&
                             is_member(a, MonoidLabel::POR) ==
                                 is_member(bar, MonoidLabel::OR);
                    });
  }
  if (id == "T-RANK2") {
    return run_scan(*info, n, options, universe_source(Universe::partial),
                    rank_is_2, [](const PTrans& a) {
                      return rank2_pop_test(a) ==
                             is_member(a, MonoidLabel::POP);
                    });
  }
  if (id == "T-DPC") {
    return run_scan(*info, n, options, isometry_source, no_filter,
                    [](const PTrans& a) {
                      return is_member(a, MonoidLabel::PORI);
                    });
  }
  if (id == "T-UNITS") {
    return run_units(*info, n, options);
  }
  if (id == "T-SEQ-ACT") {
    return run_sequence_action(*info, n, options);
  }
  if (id == "T-HV-OP-UNCORRECTED") {
    return run_scan(*info, n, options, universe_source(Universe::full),
                    no_filter, [](const PTrans& a) {
                      return hv_triple_test(a) ==
                             is_member(a, MonoidLabel::OP);
                    });
  }
  if (id == "T-W3-OP-UNCORRECTED") {
    return run_scan(*info, n, options, universe_source(Universe::full),
                    no_filter, [](const PTrans& a) {
                      return local_width_test(a, 3) ==
                             is_member(a, MonoidLabel::OP);
                    });
  }
  if (id == "T-W3-POP-UNCORRECTED") {
    return run_scan(*info, n, options, universe_source(Universe::partial),
                    no_filter, [](const PTrans& a) {
                      return local_width_test(a, 3) ==
                             is_member(a, MonoidLabel::POP);
                    });
  }
  throw std::invalid_argument("theorem id '" + std::string(theorem_id) +
                              "' has no runner");
}

std::vector<PTrans> find_counterexamples(std::string_view theorem_id, int n,
                                         int max_witnesses,
                                         const VerifyOptions& options) {
  VerifyOptions capped = options;
  capped.witness_cap = max_witnesses;
  return verify_theorem(theorem_id, n, capped).witnesses;
}

}  // namespace orichain
