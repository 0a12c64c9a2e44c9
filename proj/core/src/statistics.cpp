#include "dcfw/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include <spdlog/fmt/fmt.h>

namespace dcfw {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t index_of(std::vector<std::string>& names, const std::string& name) {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it != names.end()) return static_cast<std::size_t>(it - names.begin());
  names.push_back(name);
  return names.size() - 1;
}

}  // namespace

double shifted_geomean(const std::vector<double>& values, double shift) {
  if (values.empty()) {
    throw ContractViolation("shifted geometric mean of an empty list");
  }
  if (!(shift >= 0.0)) throw ContractViolation("shift must be >= 0");
  double sum = 0.0;
  for (double v : values) {
    if (!(v + shift > 0.0)) {
      throw ContractViolation("shifted values must be positive");
    }
    sum += std::log(v + shift);
  }
  return std::exp(sum / static_cast<double>(values.size())) - shift;
}

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::kOuterIterations:
      return "iters";
    case Metric::kWallSeconds:
      return "time";
    case Metric::kLmoCalls:
      return "lmo";
  }
  return "unknown";
}

Metric parse_metric(std::string_view name) {
  if (name == "iters") return Metric::kOuterIterations;
  if (name == "time") return Metric::kWallSeconds;
  if (name == "lmo") return Metric::kLmoCalls;
  throw ConfigError("unknown metric '" + std::string(name) +
                    "' (expected iters, time or lmo)");
}

double metric_value(const BenchResult& result, Metric metric) {
  switch (metric) {
    case Metric::kOuterIterations:
      return static_cast<double>(result.outer_iterations);
    case Metric::kWallSeconds:
      return result.wall_seconds;
    case Metric::kLmoCalls:
      return static_cast<double>(result.lmo_calls);
  }
  throw ContractViolation("unknown metric");
}

double PerformanceProfile::rho(std::size_t variant, double theta) const {
  if (variant >= ratios.size()) throw ContractViolation("no such variant");
  if (instances.empty()) return 0.0;
  const auto& r = ratios[variant];
  const auto hits = std::count_if(r.begin(), r.end(),
                                  [theta](double x) { return x <= theta; });
  return static_cast<double>(hits) / static_cast<double>(instances.size());
}

std::vector<double> PerformanceProfile::breakpoints() const {
  std::vector<double> points;
  for (const auto& row : ratios) {
    for (double r : row) {
      if (std::isfinite(r)) points.push_back(r);
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

double PerformanceProfile::max_finite_ratio() const {
  const auto points = breakpoints();
  return points.empty() ? 1.0 : points.back();
}

PerformanceProfile performance_profile(const std::vector<BenchResult>& results,
                                       Metric metric, bool modified) {
  if (results.empty()) {
    throw ContractViolation("performance profile needs at least one result");
  }
  PerformanceProfile profile;
  profile.metric = metric;
  profile.modified = modified;
  // Later rows for the same (instance, variant) replace earlier ones.
  std::map<std::pair<std::size_t, std::size_t>, double> values;
  for (const BenchResult& r : results) {
    const std::size_t p = index_of(profile.instances, r.instance);
    const std::size_t s = index_of(profile.variants, r.variant);
    const double v = metric_value(r, metric);
    if (!std::isfinite(v) || v < 0.0) {
      throw ContractViolation("metric " + std::string(to_string(metric)) +
                              " is missing for " + r.instance + "/" +
                              r.variant);
    }
    values[{p, s}] = (r.solved || modified) ? v : kInf;
  }

  const std::size_t np = profile.instances.size();
  const std::size_t ns = profile.variants.size();
  profile.ratios.assign(ns, std::vector<double>(np, kInf));
  for (std::size_t p = 0; p < np; ++p) {
    double best = kInf;
    for (std::size_t s = 0; s < ns; ++s) {
      const auto it = values.find({p, s});
      if (it != values.end()) best = std::min(best, it->second);
    }
    if (!std::isfinite(best)) continue;
    const double shift = best == 0.0 ? 1.0 : 0.0;
    for (std::size_t s = 0; s < ns; ++s) {
      const auto it = values.find({p, s});
      if (it == values.end() || !std::isfinite(it->second)) continue;
      profile.ratios[s][p] =
          it->second == best ? 1.0 : (it->second + shift) / (best + shift);
    }
  }
  return profile;
}

std::vector<double> profile_grid(const PerformanceProfile& profile, int points) {
  if (points < 2) throw ConfigError("profile grid needs at least 2 points");
  const double hi = std::max(2.0, profile.max_finite_ratio());
  std::vector<double> grid = profile.breakpoints();
  const double step = std::log(hi) / (points - 1);
  for (int i = 0; i < points; ++i) {
    grid.push_back(i == points - 1 ? hi : std::exp(step * i));
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

void write_profile_csv(std::ostream& out, const PerformanceProfile& profile,
                       const std::vector<double>& grid) {
  out << "theta";
  for (const auto& v : profile.variants) out << ',' << csv_field(v);
  out << '\n';
  for (double theta : grid) {
    out << format_double(theta);
    for (std::size_t s = 0; s < profile.variants.size(); ++s) {
      out << ',' << format_double(profile.rho(s, theta));
    }
    out << '\n';
  }
}

std::string TableRow::label() const {
  return fmt::format("n={} ({})", n, instances);
}

SummaryTable summarize_table(const std::vector<BenchResult>& results,
                             double shift) {
  SummaryTable table;
  struct Bucket {
    std::vector<std::string> instances;
    std::map<std::size_t, std::vector<const BenchResult*>> runs;
  };
  std::map<Index, Bucket> buckets;
  for (const BenchResult& r : results) {
    Bucket& bucket = buckets[r.n];
    index_of(bucket.instances, r.instance);
    bucket.runs[index_of(table.variants, r.variant)].push_back(&r);
  }

  for (const auto& [n, bucket] : buckets) {
    TableRow row;
    row.n = n;
    row.instances = bucket.instances.size();
    row.cells.resize(table.variants.size());
    for (const auto& [s, runs] : bucket.runs) {
      std::vector<double> iters, wall, lmo;
      TableCell& cell = row.cells[s];
      for (const BenchResult* r : runs) {
        iters.push_back(static_cast<double>(r->outer_iterations));
        wall.push_back(r->wall_seconds);
        lmo.push_back(static_cast<double>(r->lmo_calls));
        if (r->solved) ++cell.solved;
      }
      cell.present = true;
      cell.runs = runs.size();
      cell.iterations = shifted_geomean(iters, shift);
      cell.wall_seconds = shifted_geomean(wall, shift);
      cell.lmo_calls = shifted_geomean(lmo, shift);
    }
    row.best.assign(3, std::vector<bool>(table.variants.size(), false));
    for (int m = 0; m < 3; ++m) {
      auto pick = [m](const TableCell& c) {
        return m == 0 ? c.iterations : m == 1 ? c.wall_seconds : c.lmo_calls;
      };
      double best = kInf;
      for (const TableCell& c : row.cells) {
        if (c.present) best = std::min(best, pick(c));
      }
      for (std::size_t s = 0; s < row.cells.size(); ++s) {
        row.best[m][s] = row.cells[s].present && pick(row.cells[s]) == best;
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string to_markdown(const SummaryTable& table) {
  std::ostringstream out;
  out << "| size |";
  for (const auto& v : table.variants) {
    out << ' ' << v << " Iter | " << v << " Time | " << v << " LMO |";
  }
  out << "\n|---|";
  for (std::size_t s = 0; s < table.variants.size(); ++s) out << "---:|---:|---:|";
  out << '\n';
  for (const TableRow& row : table.rows) {
    out << "| " << row.label() << " |";
    for (std::size_t s = 0; s < row.cells.size(); ++s) {
      const TableCell& c = row.cells[s];
      const double values[3] = {c.iterations, c.wall_seconds, c.lmo_calls};
      for (int m = 0; m < 3; ++m) {
        if (!c.present) {
          out << " - |";
          continue;
        }
        const std::string text = m == 0 ? fmt::format("{:.2f}", values[m])
                                        : fmt::format("{:.3g}", values[m]);
        out << ' ' << (row.best[m][s] ? "**" + text + "**" : text) << " |";
      }
    }
    out << '\n';
  }
  return out.str();
}

void write_table_csv(std::ostream& out, const SummaryTable& table) {
  out << "bucket,n,instances,variant,runs,solved,iters_sgm,time_sgm,lmo_sgm,"
         "best_iters,best_time,best_lmo\n";
  for (const TableRow& row : table.rows) {
    for (std::size_t s = 0; s < row.cells.size(); ++s) {
      const TableCell& c = row.cells[s];
      if (!c.present) continue;
      out << csv_field(row.label()) << ',' << row.n << ',' << row.instances
          << ',' << csv_field(table.variants[s]) << ',' << c.runs << ','
          << c.solved << ',' << format_double(c.iterations) << ','
          << format_double(c.wall_seconds) << ',' << format_double(c.lmo_calls)
          << ',' << row.best[0][s] << ',' << row.best[1][s] << ','
          << row.best[2][s] << '\n';
    }
  }
}

std::vector<PrimalSeries> shift_primal_traces(std::vector<PrimalSeries> series) {
  double lowest = kInf;
  for (const auto& s : series) {
    for (double v : s.objective) {
      if (std::isfinite(v)) lowest = std::min(lowest, v);
    }
  }
  if (!std::isfinite(lowest)) return series;
  for (auto& s : series) {
    for (double& v : s.objective) v -= lowest;
  }
  return series;
}

void write_primal_csv(std::ostream& out, const std::vector<PrimalSeries>& series) {
  out << 't';
  std::size_t length = 0;
  for (const auto& s : series) {
    out << ',' << csv_field(s.variant);
    length = std::max(length, s.objective.size());
  }
  out << '\n';
  for (std::size_t t = 0; t < length; ++t) {
    out << t;
    for (const auto& s : series) {
      out << ',';
      if (t < s.objective.size()) out << format_double(s.objective[t]);
    }
    out << '\n';
  }
}

}  // namespace dcfw
