// Command-line surface over the oriented-chain library: classify single
// transformations, run membership censuses, verify the theorem catalog, hunt
// counterexamples, and time the membership tests.
//
// Exit codes: 0 success (or all theorems verified), 1 verification found
// mismatches, 2 usage, parse, or bound errors.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "orichain/census.hpp"
#include "orichain/chain_seq.hpp"
#include "orichain/cycle_graph.hpp"
#include "orichain/orientation.hpp"
#include "orichain/ptrans.hpp"

namespace {

using orichain::CensusRecord;
using orichain::EnumerationBounds;
using orichain::MonoidLabel;
using orichain::PTrans;
using orichain::TheoremInfo;
using orichain::VerificationReport;
using orichain::VerifyOptions;

struct CliConfig {
  std::string format = "text";
  int max_n = 0;  // 0 = use the built-in bounds
  int witness_cap = 10;
  int jobs = 1;
};

EnumerationBounds bounds_for(const CliConfig& config) {
  if (config.max_n <= 0) return {};
  return {config.max_n, config.max_n, config.max_n, config.max_n};
}

VerifyOptions verify_options_for(const CliConfig& config) {
  return {bounds_for(config), config.witness_cap, config.jobs};
}

int parse_int_strict(const std::string& text, const char* what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      })) {
    throw std::invalid_argument("invalid " + std::string(what) + " '" + text +
                                "'");
  }
  try {
    return std::stoi(text);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument(std::string(what) + " '" + text +
                                "' is out of range");
  }
}

// "N" or "A..B", both inclusive and 1-based.
std::pair<int, int> parse_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  int lo = 0;
  int hi = 0;
  if (dots == std::string::npos) {
    lo = hi = parse_int_strict(text, "chain size");
  } else {
    lo = parse_int_strict(text.substr(0, dots), "range start");
    hi = parse_int_strict(text.substr(dots + 2), "range end");
  }
  if (lo < 1 || hi < lo) {
    throw std::invalid_argument("invalid range '" + text +
                                "' (expected N or A..B with 1 <= A <= B)");
  }
  return {lo, hi};
}

std::string bool_text(bool value) { return value ? "true" : "false"; }

std::vector<MonoidLabel> labels_for_chain(int n) {
  std::vector<MonoidLabel> labels;
  for (MonoidLabel label : orichain::all_monoid_labels) {
    if (label == MonoidLabel::DPC && n < 3) continue;
    labels.push_back(label);
  }
  return labels;
}

void print_theorem_catalog(std::ostream& out) {
  out << "available theorem ids:\n";
  for (const TheoremInfo& info : orichain::theorem_catalog()) {
    out << "  " << info.id << " (n = " << info.min_n << ".."
        << info.default_max_n << " by default): " << info.summary << "\n";
  }
}

int run_classify(const CliConfig& config, const std::string& input) {
  const PTrans alpha = orichain::parse_ptrans(input);
  const int n = alpha.chain_size();
  const orichain::ChainSeq seq = orichain::image_sequence(alpha);
  const std::vector<MonoidLabel> labels = labels_for_chain(n);

  if (config.format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["transformation"] = orichain::to_text(alpha);
    j["chain"] = n;
    j["width"] = alpha.width();
    j["rank"] = alpha.rank();
    j["image_sequence"] = orichain::to_text(seq);
    j["descents"] = orichain::descent_count(seq);
    j["ascents"] = orichain::ascent_count(seq);
    nlohmann::ordered_json membership;
    for (MonoidLabel label : labels) {
      membership[std::string(orichain::to_string(label))] =
          orichain::is_member(alpha, label);
    }
    j["membership"] = std::move(membership);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (config.format == "csv") {
    std::cout << "label,member\n";
    for (MonoidLabel label : labels) {
      std::cout << orichain::to_string(label) << ","
                << bool_text(orichain::is_member(alpha, label)) << "\n";
    }
    return 0;
  }

  std::cout << "transformation: " << orichain::to_text(alpha) << "\n"
            << "chain: " << n << "\n"
            << "width: " << alpha.width() << "\n"
            << "rank: " << alpha.rank() << "\n"
            << "image sequence: " << orichain::to_text(seq) << "\n"
            << "descents: " << orichain::descent_count(seq) << "\n"
            << "ascents: " << orichain::ascent_count(seq) << "\n"
            << "memberships:\n";
  for (MonoidLabel label : labels) {
    std::cout << "  " << orichain::to_string(label) << ": "
              << bool_text(orichain::is_member(alpha, label)) << "\n";
  }
  return 0;
}

int run_verify(const CliConfig& config, const std::string& id,
               const std::string& range_text) {
  const TheoremInfo* info = orichain::find_theorem(id);
  if (info == nullptr) {
    std::cerr << "error: unknown theorem id '" << id << "'\n";
    print_theorem_catalog(std::cerr);
    return 2;
  }

  int lo = info->min_n;
  int hi = info->default_max_n;
  if (!range_text.empty()) {
    std::tie(lo, hi) = parse_range(range_text);
  } else if (config.max_n > 0) {
    hi = std::min(hi, config.max_n);
  }
  if (lo > hi) {
    throw std::invalid_argument("empty chain-size range " +
                                std::to_string(lo) + ".." +
                                std::to_string(hi) + " for theorem " + id);
  }

  const VerifyOptions options = verify_options_for(config);
  std::uint64_t total_mismatches = 0;
  if (config.format == "csv") {
    std::cout << "theorem_id,n,instances_checked,mismatches\n";
  }
  for (int n = lo; n <= hi; ++n) {
    const VerificationReport report = orichain::verify_theorem(id, n, options);
    total_mismatches += report.mismatches;
    if (config.format == "json") {
      std::cout << orichain::report_to_json(report) << "\n";
    } else if (config.format == "csv") {
      std::cout << report.theorem_id << "," << report.n << ","
                << report.instances_checked << "," << report.mismatches
                << "\n";
    } else {
      std::cout << report.theorem_id << " n=" << report.n << ": "
                << report.instances_checked << " instances, "
                << report.mismatches << " mismatches"
                << (report.verified() ? " [ok]" : "") << "\n";
      for (const PTrans& witness : report.witnesses) {
        std::cout << "  witness: " << orichain::to_text(witness) << "\n";
      }
    }
  }
  return total_mismatches == 0 ? 0 : 1;
}

int run_census(const CliConfig& config, const std::string& range_text,
               const std::vector<std::string>& label_args) {
  const auto [lo, hi] = parse_range(range_text);

  std::vector<MonoidLabel> requested;
  for (const std::string& text : label_args) {
    const std::optional<MonoidLabel> label = orichain::parse_monoid_label(text);
    if (!label) {
      std::string known;
      for (MonoidLabel l : orichain::all_monoid_labels) {
        if (!known.empty()) known += ", ";
        known += orichain::to_string(l);
      }
      throw std::invalid_argument("unknown monoid label '" + text +
                                  "' (known labels: " + known + ")");
    }
    requested.push_back(*label);
  }

  const EnumerationBounds bounds = bounds_for(config);
  std::vector<std::pair<int, MonoidLabel>> wanted;
  for (int n = lo; n <= hi; ++n) {
    if (requested.empty()) {
      for (MonoidLabel label : labels_for_chain(n)) wanted.emplace_back(n, label);
    } else {
      for (MonoidLabel label : requested) wanted.emplace_back(n, label);
    }
  }

  // Each record is an independent computation; with --jobs > 1 they run
  // concurrently and are reassembled in request order, so the output is
  // identical to a sequential run.
  std::vector<CensusRecord> records(wanted.size());
  const int jobs = std::clamp(config.jobs, 1, 64);
  if (jobs == 1) {
    for (std::size_t i = 0; i < wanted.size(); ++i) {
      records[i] = orichain::count_members(wanted[i].first, wanted[i].second,
                                           bounds);
    }
  } else {
    std::vector<std::future<void>> workers;
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < jobs; ++w) {
      workers.push_back(std::async(std::launch::async, [&]() {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= wanted.size()) return;
          records[i] = orichain::count_members(wanted[i].first,
                                               wanted[i].second, bounds);
        }
      }));
    }
    for (auto& worker : workers) worker.get();
  }

  if (config.format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const CensusRecord& record : records) {
      nlohmann::ordered_json row;
      row["n"] = record.n;
      row["label"] = std::string(orichain::to_string(record.label));
      row["count"] = record.count;
      rows.push_back(std::move(row));
    }
    j["records"] = std::move(rows);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << orichain::census_csv(records);
  return 0;
}

int run_counterexample(const CliConfig& config, const std::string& id, int n,
                       int cap) {
  if (orichain::find_theorem(id) == nullptr) {
    std::cerr << "error: unknown theorem id '" << id << "'\n";
    print_theorem_catalog(std::cerr);
    return 2;
  }
  const std::vector<PTrans> witnesses = orichain::find_counterexamples(
      id, n, cap, verify_options_for(config));
  if (witnesses.empty()) {
    std::cerr << "no counterexamples to " << id << " at n = " << n << "\n";
    return 0;
  }
  for (const PTrans& witness : witnesses) {
    std::cout << orichain::to_text(witness) << "\n";
  }
  return 0;
}

int run_bench(const CliConfig& config, int n) {
  const EnumerationBounds bounds = bounds_for(config);

  const auto time_over =
      [](const std::vector<PTrans>& elements,
         const std::function<bool(const PTrans&)>& test) {
        std::uint64_t positives = 0;
        std::uint64_t calls = 0;
        const auto start = std::chrono::steady_clock::now();
        std::chrono::nanoseconds elapsed{0};
        do {
          for (const PTrans& alpha : elements) {
            if (test(alpha)) ++positives;
          }
          calls += elements.size();
          elapsed = std::chrono::steady_clock::now() - start;
        } while (elapsed < std::chrono::milliseconds(150));
        return std::pair<double, std::uint64_t>(
            static_cast<double>(elapsed.count()) / static_cast<double>(calls),
            positives);
      };

  const auto report_universe = [&](orichain::Universe u, int chain) {
    const std::vector<PTrans> elements =
        orichain::enumerate_all(u, chain, bounds);
    std::cout << "universe " << orichain::to_string(u) << ", n = " << chain
              << " (" << elements.size() << " elements)\n";
    const auto [scan_ns, scan_hits] = time_over(elements, [](const PTrans& a) {
      return orichain::classify(a).cyclic;
    });
    std::cout << "  descent-scan classify:  " << scan_ns << " ns/element ("
              << scan_hits << " positives)\n";
    const auto [w3_ns, w3_hits] = time_over(elements, [](const PTrans& a) {
      return orichain::local_width_test(a, 3);
    });
    std::cout << "  width-3 local test:     " << w3_ns << " ns/element ("
              << w3_hits << " positives)\n";
    const auto [w4_ns, w4_hits] = time_over(elements, [](const PTrans& a) {
      return orichain::local_width_test(a, 4);
    });
    std::cout << "  width-4 local test:     " << w4_ns << " ns/element ("
              << w4_hits << " positives)\n";
  };

  report_universe(orichain::Universe::full, std::min(n, bounds.full));
  report_universe(orichain::Universe::partial, std::min(n, bounds.partial));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oriented transformation monoids on a finite chain"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "1.0.0");

  CliConfig config;
  app.add_option("--format", config.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--max-n", config.max_n,
                 "override every enumeration bound with this chain size");
  app.add_option("--witness-cap", config.witness_cap,
                 "maximum witnesses kept per verification report")
      ->capture_default_str();
  app.add_option("--jobs", config.jobs, "parallel scan workers")
      ->capture_default_str();

  std::string classify_input;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "membership table for one transformation");
  classify_cmd->add_option("transformation", classify_input,
                           "text form, e.g. \"n=4; [1,2,1,2]\" or "
                           "\"n=5; {1:2, 3:5, 4:1}\"")
      ->required();
  classify_cmd->fallthrough();

  std::string verify_id;
  std::string verify_range;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "exhaustively check a catalog theorem");
  verify_cmd->add_option("theorem", verify_id, "theorem id, e.g. T-W4-OR")
      ->required();
  verify_cmd->add_option("range", verify_range,
                         "chain sizes, N or A..B (default: catalog range)");
  verify_cmd->fallthrough();

  std::string census_range;
  std::vector<std::string> census_labels;
  CLI::App* census_cmd =
      app.add_subcommand("census", "membership counts over chain sizes");
  census_cmd->add_option("range", census_range, "chain sizes, N or A..B")
      ->required();
  census_cmd->add_option("labels", census_labels,
                         "monoid labels (default: all applicable)");
  census_cmd->fallthrough();

  std::string counter_id;
  int counter_n = 0;
  int counter_cap = -1;
  CLI::App* counter_cmd = app.add_subcommand(
      "counterexample", "list elements violating a catalog statement");
  counter_cmd->add_option("theorem", counter_id, "theorem id")->required();
  counter_cmd->add_option("n", counter_n, "chain size")->required();
  counter_cmd->add_option("cap", counter_cap,
                          "maximum number of witnesses (default --witness-cap)");
  counter_cmd->fallthrough();

  int bench_n = 5;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "time the descent scan against the local width tests");
  bench_cmd->add_option("n", bench_n, "chain size")->capture_default_str();
  bench_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  // The environment override applies only where the flag was not given.
  if (config.max_n <= 0) {
    if (const char* env = std::getenv("ORIENTED_CHAIN_MAX_N")) {
      try {
        config.max_n = parse_int_strict(env, "ORIENTED_CHAIN_MAX_N");
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
    }
  }

  try {
    if (classify_cmd->parsed()) return run_classify(config, classify_input);
    if (verify_cmd->parsed()) return run_verify(config, verify_id, verify_range);
    if (census_cmd->parsed()) {
      return run_census(config, census_range, census_labels);
    }
    if (counter_cmd->parsed()) {
      const int cap =
          counter_cap >= 0 ? counter_cap : std::max(config.witness_cap, 0);
      return run_counterexample(config, counter_id, counter_n, cap);
    }
    if (bench_cmd->parsed()) return run_bench(config, bench_n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand given\n";
  return 2;
}
