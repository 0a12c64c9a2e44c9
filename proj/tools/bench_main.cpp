// bench: run DCA variants over instance suites and summarize the results.
//
//   bench run --suite quadratics --sizes 10,20 --seeds 1,2,3 --out runs/q
//   bench profile --in runs/q --metric lmo
//   bench table --in runs/q
//
// Every subcommand accepts --config FILE with "key = value" lines using the
// long option names; values given on the command line take precedence.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include "dcfw/bench.hpp"
#include "dcfw/results.hpp"
#include "dcfw/statistics.hpp"

namespace fs = std::filesystem;

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kConfig = 2, kIo = 3 };

struct RunArgs {
  std::string suite;
  std::string preset = "standard";
  std::vector<dcfw::Index> sizes;
  std::vector<uint64_t> seeds;
  std::vector<std::string> variants;
  std::string qaplib_dir;
  std::string out = "bench_out";
  std::optional<int64_t> outer_cap;
  std::optional<int64_t> inner_cap;
  double tol = 1e-6;
  bool boosted = false;
  std::string subsolver;
  std::optional<double> time_limit;
};

struct ProfileArgs {
  std::string in;
  std::string metric = "lmo";
  bool modified = false;
  int points = 50;
};

struct TableArgs {
  std::string in;
};

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw dcfw::IoError("cannot create " + path.string());
  out << text;
  out.flush();
  if (!out) throw dcfw::IoError("cannot write " + path.string());
}

// CLI11 only reads config files attached to the top-level app, so the
// subcommand's --config is applied here after parsing: each key fills the
// option of the same long name unless the command line already set it.
void apply_config(CLI::App& command, const std::string& path) {
  if (path.empty()) return;
  if (!fs::is_regular_file(path)) throw dcfw::IoError("cannot read config file " + path);
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigINI().from_file(path);
  } catch (const CLI::FileError& e) {
    throw dcfw::IoError(e.what());
  } catch (const CLI::ParseError& e) {
    throw dcfw::ConfigError(path + ": " + e.what());
  }
  for (const CLI::ConfigItem& item : items) {
    const std::string key = item.fullname();
    if (key == "config") throw dcfw::ConfigError(path + ": config files cannot nest");
    CLI::Option* option = command.get_option_no_throw("--" + key);
    if (option == nullptr) {
      throw dcfw::ConfigError(path + ": unknown option '" + key + "' for " +
                              command.get_name());
    }
    if (option->count() > 0) continue;
    try {
      for (const std::string& value : item.inputs) option->add_result(value);
      option->run_callback();
    } catch (const CLI::ParseError& e) {
      throw dcfw::ConfigError(path + ": " + key + ": " + e.what());
    }
  }
}

int run_command(const RunArgs& args) {
  if (args.suite.empty()) throw dcfw::ConfigError("--suite is required");
  dcfw::SuiteOptions options;
  options.suite = dcfw::parse_suite(args.suite);
  options.preset = dcfw::parse_preset(args.preset);
  options.sizes = args.sizes;
  options.seeds = args.seeds;
  options.variants = args.variants;
  if (!args.qaplib_dir.empty()) options.qaplib_dir = args.qaplib_dir;
  options.out_dir = args.out;
  options.outer_cap = args.outer_cap;
  options.inner_cap = args.inner_cap;
  options.tolerance = args.tol;
  options.boosted = args.boosted;
  if (args.subsolver == "fw") {
    options.subsolver = dcfw::Subsolver::kVanillaFrankWolfe;
  } else if (args.subsolver == "bpcg") {
    options.subsolver = dcfw::Subsolver::kBpcg;
  }
  options.time_limit_seconds = args.time_limit;

  std::size_t solved = 0, total = 0;
  options.on_result = [&](const dcfw::BenchResult& r) {
    ++total;
    if (r.solved) ++solved;
    spdlog::info("{:<16} {:<18} {:>8} iters {:>12} lmo {:>9.3f}s  {}",
                 r.instance, r.variant, r.outer_iterations, r.lmo_calls,
                 r.wall_seconds, r.reason);
  };
  dcfw::run_suite(options);
  spdlog::info("{} of {} runs solved; results in {}", solved, total,
               (fs::path(args.out) / "results.csv").string());
  return kOk;
}

int profile_command(const ProfileArgs& args) {
  const fs::path dir = args.in;
  const auto results = dcfw::read_results_csv(dir / "results.csv");
  if (results.empty()) throw dcfw::IoError("no results in " + args.in);
  const dcfw::Metric metric = dcfw::parse_metric(args.metric);
  const auto profile = dcfw::performance_profile(results, metric, args.modified);
  std::ostringstream csv;
  dcfw::write_profile_csv(csv, profile, dcfw::profile_grid(profile, args.points));

  const fs::path out = dir / ("profile_" + args.metric +
                              (args.modified ? "_modified" : "") + ".csv");
  write_text(out, csv.str());
  std::cout << csv.str();
  spdlog::info("wrote {}", out.string());
  return kOk;
}

int table_command(const TableArgs& args) {
  const fs::path dir = args.in;
  const auto results = dcfw::read_results_csv(dir / "results.csv");
  if (results.empty()) throw dcfw::IoError("no results in " + args.in);
  const auto table = dcfw::summarize_table(results);
  const std::string markdown = dcfw::to_markdown(table);
  write_text(dir / "table.md", markdown);
  std::ostringstream csv;
  dcfw::write_table_csv(csv, table);
  write_text(dir / "table.csv", csv.str());

  std::map<std::string, std::vector<dcfw::PrimalSeries>> primal;
  for (const auto& r : results) {
    const fs::path trace = dir / dcfw::trace_path(r.instance, r.variant);
    if (!fs::exists(trace)) {
      spdlog::warn("missing trace {}", trace.string());
      continue;
    }
    dcfw::PrimalSeries series{r.variant, {}};
    for (const auto& row : dcfw::read_trace_file(trace)) {
      series.objective.push_back(row.objective);
    }
    primal[r.instance].push_back(std::move(series));
  }
  std::error_code ec;
  fs::create_directories(dir / "primal", ec);
  if (ec) throw dcfw::IoError("cannot create " + (dir / "primal").string());
  for (auto& [instance, series] : primal) {
    std::ostringstream out;
    dcfw::write_primal_csv(out, dcfw::shift_primal_traces(std::move(series)));
    write_text(dir / "primal" / (instance + ".csv"), out.str());
  }

  std::cout << markdown;
  spdlog::info("wrote table.md, table.csv and {} primal traces", primal.size());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DCA / Frank-Wolfe benchmark harness", "bench"};
  app.require_subcommand(1);

  RunArgs run_args;
  std::string run_config, profile_config, table_config;
  auto* run = app.add_subcommand("run", "Solve a suite and record traces");
  run->add_option("--config", run_config, "Key-value file with default options");
  run->add_option("--suite", run_args.suite, "quadratics, hard or qap (required)")
      ->check(CLI::IsMember({"quadratics", "hard", "qap"}));
  run->add_option("--preset", run_args.preset, "Iteration caps: standard or large")
      ->check(CLI::IsMember({"standard", "large"}));
  run->add_option("--sizes", run_args.sizes, "Comma-separated instance sizes")
      ->delimiter(',');
  run->add_option("--seeds", run_args.seeds, "Comma-separated seeds")
      ->delimiter(',');
  run->add_option("--variants", run_args.variants,
                  "Comma-separated variant names (default: the six base variants)")
      ->delimiter(',');
  run->add_option("--qaplib-dir", run_args.qaplib_dir, "Directory of QAPLIB .dat files");
  run->add_option("--out", run_args.out, "Output directory");
  run->add_option("--outer-cap", run_args.outer_cap, "Maximum DCA iterations");
  run->add_option("--inner-cap", run_args.inner_cap, "Maximum subsolver iterations");
  run->add_option("--tol", run_args.tol, "DC gap tolerance");
  run->add_flag("--boosted", run_args.boosted, "Add boosting (-BT) to every variant");
  run->add_option("--subsolver", run_args.subsolver, "Override the subsolver: fw or bpcg")
      ->check(CLI::IsMember({"fw", "bpcg"}));
  run->add_option("--time-limit", run_args.time_limit, "Seconds per run");

  ProfileArgs profile_args;
  auto* profile = app.add_subcommand("profile", "Performance profile data");
  profile->add_option("--config", profile_config, "Key-value file with default options");
  profile->add_option("--in", profile_args.in, "Directory written by bench run")
      ->required();
  profile->add_option("--metric", profile_args.metric, "iters, time or lmo")
      ->check(CLI::IsMember({"iters", "time", "lmo"}));
  profile->add_flag("--modified", profile_args.modified,
                    "Treat every run as solved at its final iteration");
  profile->add_option("--points", profile_args.points, "Log-grid points")
      ->check(CLI::Range(2, 10000));

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Shifted geometric mean table");
  table->add_option("--config", table_config, "Key-value file with default options");
  table->add_option("--in", table_args.in, "Directory written by bench run")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (*run) {
      apply_config(*run, run_config);
      return run_command(run_args);
    }
    if (*profile) {
      apply_config(*profile, profile_config);
      return profile_command(profile_args);
    }
    if (*table) {
      apply_config(*table, table_config);
      return table_command(table_args);
    }
  } catch (const dcfw::ConfigError& e) {
    spdlog::error("configuration error: {}", e.what());
    return kConfig;
  } catch (const dcfw::IoError& e) {
    spdlog::error("I/O error: {}", e.what());
    return kIo;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kFailure;
  }
  return kOk;
}
