#include "orichain/census.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "orichain/orientation.hpp"
#include "orichain/ptrans.hpp"

using orichain::census_csv;
using orichain::census_universe;
using orichain::CensusRecord;
using orichain::count_members;
using orichain::enumerate;
using orichain::enumerate_all;
using orichain::enumerate_dpc;
using orichain::enumerate_dpc_all;
using orichain::EnumerationBounds;
using orichain::find_counterexamples;
using orichain::find_theorem;
using orichain::MonoidLabel;
using orichain::PTrans;
using orichain::TheoremInfo;
using orichain::Universe;
using orichain::universe_size;
using orichain::VerificationReport;
using orichain::verify_theorem;
using orichain::VerifyOptions;

namespace {

// Independent dense-lexicographic walk over PT_n (see also the identical
// helper in the orientation tests; duplicated on purpose so each suite
// stands alone).
template <typename Fn>
void for_each_partial(int n, Fn&& fn) {
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  while (true) {
    fn(PTrans::from_image_vector(n, img));
    int pos = n - 1;
    while (pos >= 0 && img[static_cast<std::size_t>(pos)] == n) {
      img[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) {
      return;
    }
    ++img[static_cast<std::size_t>(pos)];
  }
}

// Cycle distance written inline so the recount below shares nothing with
// the production metric.
int ring_distance(int n, int x, int y) {
  const int a = (x - y + n) % n;
  const int b = (y - x + n) % n;
  return a < b ? a : b;
}

bool ring_isometry(const PTrans& alpha) {
  const int n = alpha.chain_size();
  const std::vector<int> dom = alpha.domain();
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = i + 1; j < dom.size(); ++j) {
      if (ring_distance(n, dom[i], dom[j]) !=
          ring_distance(n, alpha[dom[i]], alpha[dom[j]])) {
        return false;
      }
    }
  }
  return true;
}

// Oracle recount of one census row by scanning PT_n with the naive
// predicates.
std::uint64_t oracle_count(int n, MonoidLabel label) {
  std::uint64_t count = 0;
  for_each_partial(n, [&](const PTrans& alpha) {
    const std::vector<int> word = oritest::image_word(alpha);
    const bool cyc = oritest::oracle_cyclic(word);
    const bool ori = oritest::oracle_oriented(word);
    bool in = false;
    switch (label) {
      case MonoidLabel::PT:   in = true; break;
      case MonoidLabel::T:    in = alpha.is_full(); break;
      case MonoidLabel::I:    in = alpha.is_injective(); break;
      case MonoidLabel::S:    in = alpha.is_permutation(); break;
      case MonoidLabel::OP:   in = alpha.is_full() && cyc; break;
      case MonoidLabel::OR:   in = alpha.is_full() && ori; break;
      case MonoidLabel::POP:  in = cyc; break;
      case MonoidLabel::POR:  in = ori; break;
      case MonoidLabel::POPI: in = alpha.is_injective() && cyc; break;
      case MonoidLabel::PORI: in = alpha.is_injective() && ori; break;
      case MonoidLabel::DPC:  in = alpha.is_injective() && ring_isometry(alpha); break;
      case MonoidLabel::C:    in = alpha.is_permutation() && cyc; break;
      case MonoidLabel::D:    in = alpha.is_permutation() && ori; break;
    }
    if (in) {
      ++count;
    }
  });
  return count;
}

}  // namespace

TEST_CASE("universe sizes match the closed forms") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(universe_size(Universe::full, n) ==
          oritest::oracle_pow(static_cast<std::uint64_t>(n), n));
    CHECK(universe_size(Universe::partial, n) ==
          oritest::oracle_pow(static_cast<std::uint64_t>(n) + 1, n));
    CHECK(universe_size(Universe::injective, n) ==
          oritest::oracle_injective_universe_size(n));
  }
  CHECK(universe_size(Universe::injective, 5) == 1546);
  CHECK(universe_size(Universe::injective, 6) == 13327);
  CHECK(universe_size(Universe::injective, 8) == 1441729);
  CHECK(universe_size(Universe::full, 8) == 16777216);
  CHECK_THROWS_AS(universe_size(Universe::full, 16), std::out_of_range);
  CHECK_THROWS_AS(universe_size(Universe::full, 0), std::invalid_argument);
}

TEST_CASE("census universes per label") {
  CHECK(census_universe(MonoidLabel::PT) == Universe::partial);
  CHECK(census_universe(MonoidLabel::POP) == Universe::partial);
  CHECK(census_universe(MonoidLabel::POR) == Universe::partial);
  CHECK(census_universe(MonoidLabel::T) == Universe::full);
  CHECK(census_universe(MonoidLabel::OP) == Universe::full);
  CHECK(census_universe(MonoidLabel::OR) == Universe::full);
  CHECK(census_universe(MonoidLabel::S) == Universe::full);
  CHECK(census_universe(MonoidLabel::C) == Universe::full);
  CHECK(census_universe(MonoidLabel::D) == Universe::full);
  CHECK(census_universe(MonoidLabel::I) == Universe::injective);
  CHECK(census_universe(MonoidLabel::POPI) == Universe::injective);
  CHECK(census_universe(MonoidLabel::PORI) == Universe::injective);
  CHECK_THROWS_AS(census_universe(MonoidLabel::DPC), std::invalid_argument);
}

TEST_CASE("enumeration visits each universe exactly once in order") {
  for (int n = 1; n <= 4; ++n) {
    for (Universe u :
         {Universe::full, Universe::partial, Universe::injective}) {
      const std::vector<PTrans> all = enumerate_all(u, n);
      CHECK(all.size() == universe_size(u, n));
      const std::set<PTrans> distinct(all.begin(), all.end());
      CHECK(distinct.size() == all.size());
      for (const PTrans& alpha : all) {
        CHECK(alpha.chain_size() == n);
        if (u == Universe::full) {
          CHECK(alpha.is_full());
        }
        if (u == Universe::injective) {
          CHECK(alpha.is_injective());
        }
      }
    }
  }

  const std::vector<PTrans> full3 = enumerate_all(Universe::full, 3);
  CHECK(full3.front() == PTrans::full_map(3, {1, 1, 1}));
  CHECK(full3.back() == PTrans::full_map(3, {3, 3, 3}));
  CHECK(std::is_sorted(full3.begin(), full3.end()));

  // The partial stream is the increasing PTrans order itself.
  const std::vector<PTrans> partial3 = enumerate_all(Universe::partial, 3);
  CHECK(partial3.front() == PTrans::empty_map(3));
  CHECK(std::is_sorted(partial3.begin(), partial3.end()));
  std::vector<PTrans> reference;
  for_each_partial(3, [&](const PTrans& alpha) { reference.push_back(alpha); });
  CHECK(partial3 == reference);

  // The injective stream groups by domain subset (as an ascending bitmask
  // with point i on bit i-1), then runs lexicographically over the image
  // tuples.
  const std::vector<PTrans> inj3 = enumerate_all(Universe::injective, 3);
  CHECK(inj3.front() == PTrans::empty_map(3));
  CHECK(inj3[1] == PTrans::make(3, {{1, 1}}));
  CHECK(inj3[2] == PTrans::make(3, {{1, 2}}));
  unsigned previous_mask = 0;
  std::vector<PTrans> same_mask_run;
  for (const PTrans& alpha : inj3) {
    unsigned mask = 0;
    for (int x : alpha.domain()) {
      mask |= 1u << (x - 1);
    }
    CHECK(mask >= previous_mask);
    if (mask != previous_mask) {
      same_mask_run.clear();
      previous_mask = mask;
    }
    if (!same_mask_run.empty()) {
      CHECK(same_mask_run.back().image_vector() < alpha.image_vector());
    }
    same_mask_run.push_back(alpha);
  }
}

TEST_CASE("enumeration can stop early") {
  int seen = 0;
  const bool stopped = enumerate(Universe::full, 3, [&](const PTrans&) {
    ++seen;
    return seen == 5;
  });
  CHECK(stopped);
  CHECK(seen == 5);
  const bool exhausted = enumerate(Universe::full, 2, [](const PTrans&) {
    return false;
  });
  CHECK_FALSE(exhausted);
}

TEST_CASE("enumeration bounds are enforced and adjustable") {
  CHECK_THROWS_AS(enumerate_all(Universe::partial, 7), std::out_of_range);
  CHECK_THROWS_AS(enumerate_all(Universe::full, 9), std::out_of_range);
  CHECK_THROWS_AS(enumerate_all(Universe::full, 0), std::invalid_argument);
  EnumerationBounds tight;
  tight.full = 2;
  CHECK_THROWS_AS(enumerate_all(Universe::full, 3, tight), std::out_of_range);
  CHECK(enumerate_all(Universe::full, 2, tight).size() == 4);
}

TEST_CASE("cycle isometry enumeration agrees with filtering") {
  for (int n = 3; n <= 6; ++n) {
    const std::vector<PTrans> direct = enumerate_dpc_all(n);
    CHECK(std::is_sorted(direct.begin(), direct.end()));
    std::vector<PTrans> filtered;
    for (const PTrans& alpha : enumerate_all(Universe::injective, n)) {
      if (ring_isometry(alpha)) {
        filtered.push_back(alpha);
      }
    }
    std::sort(filtered.begin(), filtered.end());
    CHECK(direct == filtered);
  }
  CHECK_THROWS_AS(enumerate_dpc_all(2), std::domain_error);
  CHECK_THROWS_AS(enumerate_dpc_all(9), std::out_of_range);
}

TEST_CASE("cycle isometry counts") {
  // On a 3-cycle all distinct vertices are adjacent, so every partial
  // injection preserves distance and the count equals the injective
  // universe size.
  CHECK(enumerate_dpc_all(3).size() == universe_size(Universe::injective, 3));
  const std::vector<std::pair<int, std::size_t>> pinned = {
      {3, 34}, {4, 97}, {5, 286}, {6, 703}, {7, 1730}, {8, 3985}};
  for (const auto& [n, expected] : pinned) {
    CHECK(enumerate_dpc_all(n).size() == expected);
  }
}

TEST_CASE("membership census matches an oracle recount") {
  for (int n = 1; n <= 4; ++n) {
    for (MonoidLabel label : orichain::all_monoid_labels) {
      if (label == MonoidLabel::DPC && n < 3) {
        continue;
      }
      const CensusRecord record = count_members(n, label);
      CHECK(record.n == n);
      CHECK(record.label == label);
      CHECK(record.count == oracle_count(n, label));
    }
  }
}

TEST_CASE("orientation-preserving full maps follow the closed form") {
  // n * (C(2n-1, n) - n) + n, checked against the census.
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t expected =
        static_cast<std::uint64_t>(n) *
            (oritest::oracle_binomial(2 * n - 1, n) -
             static_cast<std::uint64_t>(n)) +
        static_cast<std::uint64_t>(n);
    CHECK(count_members(n, MonoidLabel::OP).count == expected);
  }
  CHECK(count_members(5, MonoidLabel::OP).count == 610);
}

TEST_CASE("census csv bytes") {
  const std::vector<CensusRecord> records = {
      {3, MonoidLabel::OP, 24},
      {3, MonoidLabel::OR, 27},
  };
  CHECK(census_csv(records) == "n,label,count\n3,OP,24\n3,OR,27\n");
  CHECK(census_csv({}) == "n,label,count\n");
}

TEST_CASE("statement catalog") {
  const auto catalog = orichain::theorem_catalog();
  CHECK(catalog.size() == 16);
  std::set<std::string_view> ids;
  for (const TheoremInfo& info : catalog) {
    CHECK(ids.insert(info.id).second);
    CHECK_FALSE(info.summary.empty());
    CHECK(info.min_n >= 1);
    CHECK(info.min_n <= info.default_max_n);
    CHECK(find_theorem(info.id) == &info);
  }
  const TheoremInfo* quad = find_theorem("T-W4-OR");
  REQUIRE(quad != nullptr);
  CHECK(quad->id == "T-W4-OR");
  CHECK(find_theorem("T-DPC") != nullptr);
  CHECK(find_theorem("T-DPC")->min_n == 3);
  CHECK(find_theorem("NOPE") == nullptr);
  CHECK(find_theorem("") == nullptr);
}

TEST_CASE("verification of a statement that holds") {
  const VerificationReport report = verify_theorem("T-W4-OR", 4);
  CHECK(report.theorem_id == "T-W4-OR");
  CHECK(report.n == 4);
  CHECK(report.instances_checked == 256);
  CHECK(report.mismatches == 0);
  CHECK(report.witnesses.empty());
  CHECK(report.verified());
}

TEST_CASE("verification of a statement that fails at rank two") {
  const VerificationReport report = verify_theorem("T-W3-OP-UNCORRECTED", 4);
  CHECK(report.instances_checked == 256);
  CHECK(report.mismatches == 12);
  CHECK_FALSE(report.verified());
  REQUIRE(report.witnesses.size() == 10);  // default witness cap
  CHECK(report.witnesses.front() == PTrans::full_map(4, {1, 2, 1, 2}));
  for (const PTrans& alpha : report.witnesses) {
    CHECK(alpha.rank() == 2);
  }

  VerifyOptions few;
  few.witness_cap = 3;
  CHECK(verify_theorem("T-W3-OP-UNCORRECTED", 4, few).witnesses.size() == 3);

  // The same statement is sound on a three-element chain: a full image
  // sequence of length three cannot evade the width-3 scan.
  CHECK(verify_theorem("T-W3-OP-UNCORRECTED", 3).verified());
}

TEST_CASE("verification input validation") {
  CHECK_THROWS_AS(verify_theorem("NOPE", 4), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem("T-DPC", 2), std::out_of_range);
  CHECK_THROWS_AS(verify_theorem("T-W3-POP", 7), std::out_of_range);
  CHECK_THROWS_AS(verify_theorem("T-HV-OP", 9), std::out_of_range);
}

TEST_CASE("instance counts cover exactly the intended scope") {
  // Full maps of rank two are excluded from the triple-test statement.
  CHECK(verify_theorem("T-HV-OP", 4).instances_checked == 256 - 84);
  // The rank-two statement scans exactly the rank-two partial maps.
  CHECK(verify_theorem("T-RANK2", 4).instances_checked == 300);
  // The extension statement scans the partial maps of width at least three.
  CHECK(verify_theorem("T-BAR", 4).instances_checked == 512);
  // The unit-group statement scans each permutation once per monoid family.
  CHECK(verify_theorem("T-UNITS", 4).instances_checked == 144);
  // The sequence-action statement scans every word of length three to five.
  CHECK(verify_theorem("T-SEQ-ACT", 2).instances_checked == 56);
}

TEST_CASE("counterexample search") {
  const std::vector<PTrans> hits =
      find_counterexamples("T-W3-OP-UNCORRECTED", 4, 3);
  REQUIRE(hits.size() == 3);
  CHECK(hits.front() == PTrans::full_map(4, {1, 2, 1, 2}));
  CHECK(find_counterexamples("T-W3-OP-UNCORRECTED", 3, 10).empty());
  CHECK(find_counterexamples("T-W4-OR", 5, 10).empty());
  const std::vector<PTrans> triple_hits =
      find_counterexamples("T-HV-OP-UNCORRECTED", 4, 100);
  CHECK_FALSE(triple_hits.empty());
  for (const PTrans& alpha : triple_hits) {
    CHECK(alpha.rank() == 2);
  }
}

TEST_CASE("parallel verification is deterministic") {
  for (const char* id : {"T-W3-OP-UNCORRECTED", "T-W4-OR", "T-RANK2"}) {
    const VerificationReport sequential = verify_theorem(id, 4);
    VerifyOptions parallel;
    parallel.jobs = 3;
    const VerificationReport threaded = verify_theorem(id, 4, parallel);
    CHECK(threaded.theorem_id == sequential.theorem_id);
    CHECK(threaded.n == sequential.n);
    CHECK(threaded.instances_checked == sequential.instances_checked);
    CHECK(threaded.mismatches == sequential.mismatches);
    CHECK(threaded.witnesses == sequential.witnesses);
  }
}

TEST_CASE("verification report renders as stable json") {
  const std::string clean = orichain::report_to_json(verify_theorem("T-W4-OR", 2));
  CHECK(clean ==
        "{\n"
        "  \"schema\": 1,\n"
        "  \"theorem_id\": \"T-W4-OR\",\n"
        "  \"n\": 2,\n"
        "  \"instances_checked\": 4,\n"
        "  \"mismatches\": 0,\n"
        "  \"witnesses\": []\n"
        "}");

  VerifyOptions one;
  one.witness_cap = 1;
  const std::string failing =
      orichain::report_to_json(verify_theorem("T-W3-OP-UNCORRECTED", 4, one));
  CHECK(failing ==
        "{\n"
        "  \"schema\": 1,\n"
        "  \"theorem_id\": \"T-W3-OP-UNCORRECTED\",\n"
        "  \"n\": 4,\n"
        "  \"instances_checked\": 256,\n"
        "  \"mismatches\": 12,\n"
        "  \"witnesses\": [\n"
        "    \"n=4; [1,2,1,2]\"\n"
        "  ]\n"
        "}");
}
