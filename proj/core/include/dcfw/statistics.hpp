#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcfw/common.hpp"
#include "dcfw/results.hpp"

namespace dcfw {

// exp(mean(log(v + shift))) - shift.
double shifted_geomean(const std::vector<double>& values, double shift = 1.0);

enum class Metric { kOuterIterations, kWallSeconds, kLmoCalls };

std::string_view to_string(Metric metric);
// Accepts "iters", "time" and "lmo". Throws ConfigError otherwise.
Metric parse_metric(std::string_view name);
double metric_value(const BenchResult& result, Metric metric);

// Dolan-More profile. ratios[s][p] is the metric of variant s on instance p
// divided by the best metric on p; +inf marks an unsolved or missing run.
struct PerformanceProfile {
  Metric metric = Metric::kOuterIterations;
  bool modified = false;
  std::vector<std::string> variants;   // order of first appearance
  std::vector<std::string> instances;  // order of first appearance
  std::vector<std::vector<double>> ratios;

  // Fraction of instances with ratio <= theta.
  double rho(std::size_t variant, double theta) const;
  // Sorted distinct finite ratios; rho only changes at these points.
  std::vector<double> breakpoints() const;
  double max_finite_ratio() const;
};

// With `modified`, every run counts as solved at its final iteration. When
// the best value on an instance is 0, ratios on that instance use values
// shifted by 1 so that ties at 0 give ratio 1.
PerformanceProfile performance_profile(const std::vector<BenchResult>& results,
                                       Metric metric, bool modified = false);

// `points` log-spaced values from 1 to max(hi, 2) merged with every
// breakpoint of the profile.
std::vector<double> profile_grid(const PerformanceProfile& profile,
                                 int points = 50);
// Columns: theta, then one per variant.
void write_profile_csv(std::ostream& out, const PerformanceProfile& profile,
                       const std::vector<double>& grid);

struct TableCell {
  bool present = false;
  std::size_t runs = 0;
  double iterations = 0.0;
  double wall_seconds = 0.0;
  double lmo_calls = 0.0;
  std::size_t solved = 0;
};

struct TableRow {
  Index n = 0;
  std::size_t instances = 0;
  std::vector<TableCell> cells;  // one per variant
  // best[m][s]: variant s attains the row minimum of metric m.
  std::vector<std::vector<bool>> best;

  std::string label() const;  // "n=10 (5)"
};

struct SummaryTable {
  std::vector<std::string> variants;
  std::vector<TableRow> rows;  // ascending n
};

// Shifted geometric means (shift 1) of every metric per (n, variant) over all
// runs, solved or not.
SummaryTable summarize_table(const std::vector<BenchResult>& results,
                             double shift = 1.0);
// Winners are wrapped in ** **.
std::string to_markdown(const SummaryTable& table);
void write_table_csv(std::ostream& out, const SummaryTable& table);

struct PrimalSeries {
  std::string variant;
  std::vector<double> objective;
};

// Subtracts the smallest finite objective over all series of one instance.
std::vector<PrimalSeries> shift_primal_traces(std::vector<PrimalSeries> series);
// Columns: t, then one per series; shorter series leave empty cells.
void write_primal_csv(std::ostream& out, const std::vector<PrimalSeries>& series);

}  // namespace dcfw
