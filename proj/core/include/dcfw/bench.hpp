#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcfw/dca.hpp"
#include "dcfw/results.hpp"

namespace dcfw {

enum class Suite { kQuadratics, kHard, kQap };
enum class Preset { kStandard, kLarge };

std::string_view to_string(Suite suite);
Suite parse_suite(std::string_view name);  // quadratics, hard, qap
Preset parse_preset(std::string_view name);  // standard, large

// Variant names follow DCA-{FW|BPCG}[-WS][-ES][-BT]: WS warm-starts the
// active set (BPCG only), ES uses the adaptive stop rule instead of a fixed
// epsilon, BT boosts each step.
struct VariantSpec {
  std::string name;
  Subsolver subsolver = Subsolver::kBpcg;
  bool warm_start = false;
  StopMode stop_mode = StopMode::kFixedEpsilon;
  bool boosted = false;
};

// Throws ConfigError for names outside the grammar and for WS without BPCG.
VariantSpec make_variant(std::string_view name);
std::string variant_name(const VariantSpec& spec);
// Applies a subsolver override; throws ConfigError if the variant warm-starts
// and the override is not BPCG.
VariantSpec with_subsolver(VariantSpec spec, Subsolver subsolver);
VariantSpec with_boosting(VariantSpec spec);

// DCA-FW, DCA-FW-ES, DCA-BPCG, DCA-BPCG-ES, DCA-BPCG-WS, DCA-BPCG-WS-ES.
const std::vector<std::string>& default_variants();

struct IterationCaps {
  int64_t outer;
  int64_t inner;
};

// quadratics and hard: 200/10000 (standard) or 500/50000 (large);
// qap: 500/50000.
IterationCaps default_caps(Suite suite, Preset preset);

struct SolverSettings {
  IterationCaps caps{200, 10000};
  double tolerance = 1e-6;
  double fw_gap_tolerance = 5e-7;
  std::optional<double> time_limit_seconds;
};

DcaConfig make_config(const VariantSpec& spec, const SolverSettings& settings);

struct SuiteOptions {
  Suite suite = Suite::kQuadratics;
  Preset preset = Preset::kStandard;
  std::vector<Index> sizes;       // qap: filter; empty means n <= 20
  std::vector<uint64_t> seeds;    // ignored for qap
  std::vector<std::string> variants;  // empty means default_variants()
  std::optional<std::filesystem::path> qaplib_dir;
  std::filesystem::path out_dir = "bench_out";
  std::optional<int64_t> outer_cap;
  std::optional<int64_t> inner_cap;
  double tolerance = 1e-6;
  bool boosted = false;
  std::optional<Subsolver> subsolver;
  std::optional<double> time_limit_seconds;
  // Called after each run has been persisted.
  std::function<void(const BenchResult&)> on_result;
};

// Runs every instance against every variant, appending each result to
// out_dir/results.csv and writing its trace before the next run starts.
// Failed runs are recorded as unsolved with the error as reason. Throws
// ConfigError for invalid options and IoError for output failures.
std::vector<BenchResult> run_suite(const SuiteOptions& options);

}  // namespace dcfw
