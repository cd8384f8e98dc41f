#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orichain/ptrans.hpp"

namespace orichain {

// The ground sets that can be exhaustively enumerated.
enum class Universe {
  full,       // T_n: all full transformations
  partial,    // PT_n: all partial transformations
  injective,  // I_n: all partial permutations
};

std::string_view to_string(Universe u);

// Upper bounds on the chain size accepted by the enumerators. They keep the
// exhaustive suites desk-scale and are configuration, not constants.
struct EnumerationBounds {
  int full = 8;       // |T_8| = 16'777'216
  int partial = 6;    // |PT_6| = 117'649
  int injective = 8;  // |I_8| = 1'441'729
  int isometry = 8;   // backtracking bound for the cycle-graph isometries

  int limit_for(Universe u) const;
};

// Number of elements enumerate(u, n, ...) yields: n^n, (n+1)^n, or
// sum_k C(n,k)^2 k!. Representable for n <= 15.
std::uint64_t universe_size(Universe u, int n);

// The universe a membership census for the label scans. The cycle-graph
// isometries are enumerated directly (see enumerate_dpc) and have no entry.
Universe census_universe(MonoidLabel label);

// Visit every element of the universe exactly once. Full and partial
// transformations stream in increasing PTrans order (lexicographic on the
// dense image vector, undefined first); partial permutations stream by
// domain subset (bitmask of the domain ascending, point i on bit i-1), then
// lexicographically over the injective image tuples of each domain. The sink
// returns true to stop early; the function returns true iff it was stopped.
bool enumerate(Universe u, int n, const std::function<bool(const PTrans&)>& sink,
               const EnumerationBounds& bounds = {});
std::vector<PTrans> enumerate_all(Universe u, int n,
                                  const EnumerationBounds& bounds = {});

// Visit every distance-preserving partial injection of the cycle graph on n
// vertices, by backtracking extension; output order is increasing PTrans
// order. Requires 3 <= n <= bounds.isometry.
bool enumerate_dpc(int n, const std::function<bool(const PTrans&)>& sink,
                   const EnumerationBounds& bounds = {});
std::vector<PTrans> enumerate_dpc_all(int n,
                                      const EnumerationBounds& bounds = {});

// One row of a membership census.
struct CensusRecord {
  int n = 0;
  MonoidLabel label = MonoidLabel::PT;
  std::uint64_t count = 0;

  bool operator==(const CensusRecord&) const = default;
};

CensusRecord count_members(int n, MonoidLabel label,
                           const EnumerationBounds& bounds = {});

// CSV with header "n,label,count", one record per line, trailing newline.
std::string census_csv(std::span<const CensusRecord> records);

// Outcome of one exhaustive check of a catalog statement at one chain size.
struct VerificationReport {
  std::string theorem_id;
  int n = 0;
  std::uint64_t instances_checked = 0;
  std::uint64_t mismatches = 0;
  std::vector<PTrans> witnesses;  // first few failures, enumeration order

  bool verified() const { return mismatches == 0; }
};

// JSON object {schema, theorem_id, n, instances_checked, mismatches,
// witnesses: [transformation text form]}.
std::string report_to_json(const VerificationReport& report);

struct TheoremInfo {
  std::string_view id;
  std::string_view summary;
  int min_n = 1;
  int default_max_n = 5;
};

// The fixed catalog of checkable statements. The "-UNCORRECTED" entries are
// known-false variants kept as counterexample targets; every other entry
// must verify with zero mismatches at any chain size within bounds.
std::span<const TheoremInfo> theorem_catalog();
const TheoremInfo* find_theorem(std::string_view theorem_id);

struct VerifyOptions {
  EnumerationBounds bounds{};
  int witness_cap = 10;
  int jobs = 1;  // parallel scan workers; results are identical for any value
};

VerificationReport verify_theorem(std::string_view theorem_id, int n,
                                  const VerifyOptions& options = {});

// The elements violating the statement, in enumeration order, at most
// max_witnesses of them. Empty for every statement that holds.
std::vector<PTrans> find_counterexamples(std::string_view theorem_id, int n,
                                         int max_witnesses,
                                         const VerifyOptions& options = {});

}  // namespace orichain
