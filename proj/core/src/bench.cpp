#include "dcfw/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <memory>
#include <system_error>

#include <spdlog/spdlog.h>

#include "dcfw/problems.hpp"
#include "dcfw/qaplib.hpp"

namespace dcfw {
namespace {

struct Job {
  std::string id;
  Index n;
  uint64_t seed;
  std::function<DcProblem()> build;
};

std::vector<Job> make_jobs(const SuiteOptions& options) {
  std::vector<Job> jobs;
  if (options.suite == Suite::kQap) {
    if (!options.qaplib_dir) throw ConfigError("the qap suite needs --qaplib-dir");
    LoadedDirectory loaded = load_directory(*options.qaplib_dir);
    for (const auto& [name, reason] : loaded.report.invalid) {
      spdlog::warn("skipping QAPLIB file {}: {}", name, reason);
    }
    for (QapInstance& inst : loaded.instances) {
      const bool wanted =
          options.sizes.empty()
              ? inst.n <= 20
              : std::find(options.sizes.begin(), options.sizes.end(), inst.n) !=
                    options.sizes.end();
      if (!wanted) continue;
      auto shared = std::make_shared<const QapInstance>(std::move(inst));
      jobs.push_back({shared->name, shared->n, 0,
                      [shared] { return qap_dc_oracles(*shared); }});
    }
    return jobs;
  }

  if (options.sizes.empty()) throw ConfigError("no instance sizes given");
  if (options.seeds.empty()) throw ConfigError("no seeds given");
  for (Index n : options.sizes) {
    if (n < 1) throw ConfigError("instance sizes must be >= 1");
    for (uint64_t seed : options.seeds) {
      if (options.suite == Suite::kQuadratics) {
        jobs.push_back({"quad-n" + std::to_string(n) + "-s" + std::to_string(seed),
                        n, seed,
                        [n, seed] { return make_problem(gen_quadratic_dc(n, seed)); }});
      } else {
        jobs.push_back({"hard-n" + std::to_string(n) + "-s" + std::to_string(seed),
                        n, seed,
                        [n, seed] { return make_problem(gen_hard_dc(n, seed)); }});
      }
    }
  }
  return jobs;
}

std::ofstream open_results(const std::filesystem::path& path) {
  std::error_code ec;
  const bool fresh =
      !std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0;
  if (!fresh) {
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    if (!header.empty() && header.back() == '\r') header.pop_back();
    if (header != kResultsHeader) {
      throw IoError(path.string() + " exists with a different header");
    }
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  if (fresh) out << kResultsHeader << '\n';
  return out;
}

}  // namespace

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::kQuadratics:
      return "quadratics";
    case Suite::kHard:
      return "hard";
    case Suite::kQap:
      return "qap";
  }
  return "unknown";
}

Suite parse_suite(std::string_view name) {
  if (name == "quadratics") return Suite::kQuadratics;
  if (name == "hard") return Suite::kHard;
  if (name == "qap") return Suite::kQap;
  throw ConfigError("unknown suite '" + std::string(name) +
                    "' (expected quadratics, hard or qap)");
}

Preset parse_preset(std::string_view name) {
  if (name == "standard") return Preset::kStandard;
  if (name == "large") return Preset::kLarge;
  throw ConfigError("unknown preset '" + std::string(name) +
                    "' (expected standard or large)");
}

VariantSpec make_variant(std::string_view name) {
  auto fail = [&]() -> VariantSpec {
    throw ConfigError("unknown variant '" + std::string(name) +
                      "' (expected DCA-{FW|BPCG}[-WS][-ES][-BT])");
  };
  std::string_view rest = name;
  auto eat = [&rest](std::string_view token) {
    if (rest.substr(0, token.size()) != token) return false;
    rest.remove_prefix(token.size());
    return true;
  };

  VariantSpec spec;
  if (!eat("DCA-")) return fail();
  if (eat("BPCG")) {
    spec.subsolver = Subsolver::kBpcg;
  } else if (eat("FW")) {
    spec.subsolver = Subsolver::kVanillaFrankWolfe;
  } else {
    return fail();
  }
  spec.warm_start = eat("-WS");
  if (eat("-ES")) spec.stop_mode = StopMode::kAdaptive;
  spec.boosted = eat("-BT");
  if (!rest.empty()) return fail();
  if (spec.warm_start && spec.subsolver != Subsolver::kBpcg) {
    throw ConfigError("variant " + std::string(name) +
                      ": warm start requires the BPCG subsolver");
  }
  spec.name = std::string(name);
  return spec;
}

std::string variant_name(const VariantSpec& spec) {
  std::string name = "DCA-";
  name += spec.subsolver == Subsolver::kBpcg ? "BPCG" : "FW";
  if (spec.warm_start) name += "-WS";
  if (spec.stop_mode == StopMode::kAdaptive) name += "-ES";
  if (spec.boosted) name += "-BT";
  return name;
}

VariantSpec with_subsolver(VariantSpec spec, Subsolver subsolver) {
  if (spec.warm_start && subsolver != Subsolver::kBpcg) {
    throw ConfigError("variant " + spec.name +
                      " warm-starts and cannot use the FW subsolver");
  }
  spec.subsolver = subsolver;
  spec.name = variant_name(spec);
  return spec;
}

VariantSpec with_boosting(VariantSpec spec) {
  spec.boosted = true;
  spec.name = variant_name(spec);
  return spec;
}

const std::vector<std::string>& default_variants() {
  static const std::vector<std::string> names = {
      "DCA-FW",      "DCA-FW-ES",    "DCA-BPCG",
      "DCA-BPCG-ES", "DCA-BPCG-WS",  "DCA-BPCG-WS-ES"};
  return names;
}

IterationCaps default_caps(Suite suite, Preset preset) {
  if (suite == Suite::kQap || preset == Preset::kLarge) return {500, 50000};
  return {200, 10000};
}

DcaConfig make_config(const VariantSpec& spec, const SolverSettings& settings) {
  DcaConfig config;
  config.max_outer_iterations = settings.caps.outer;
  config.max_inner_iterations = settings.caps.inner;
  config.dca_gap_tolerance = settings.tolerance;
  config.fw_gap_tolerance = settings.fw_gap_tolerance;
  config.fixed_epsilon = settings.fw_gap_tolerance;
  config.subsolver = spec.subsolver;
  config.warm_start = spec.warm_start;
  config.stop_mode = spec.stop_mode;
  config.boosted = spec.boosted;
  config.time_limit_seconds = settings.time_limit_seconds;
  config.validate();
  return config;
}

std::vector<BenchResult> run_suite(const SuiteOptions& options) {
  const auto& names =
      options.variants.empty() ? default_variants() : options.variants;
  SolverSettings settings;
  settings.caps = default_caps(options.suite, options.preset);
  if (options.outer_cap) settings.caps.outer = *options.outer_cap;
  if (options.inner_cap) settings.caps.inner = *options.inner_cap;
  settings.tolerance = options.tolerance;
  settings.time_limit_seconds = options.time_limit_seconds;

  std::vector<std::pair<VariantSpec, DcaConfig>> variants;
  for (const std::string& name : names) {
    VariantSpec spec = make_variant(name);
    if (options.subsolver) spec = with_subsolver(spec, *options.subsolver);
    if (options.boosted) spec = with_boosting(spec);
    variants.emplace_back(spec, make_config(spec, settings));
  }
  const std::vector<Job> jobs = make_jobs(options);

  std::error_code ec;
  std::filesystem::create_directories(options.out_dir / "traces", ec);
  if (ec) {
    throw IoError("cannot create " + (options.out_dir / "traces").string() +
                  ": " + ec.message());
  }
  std::ofstream index = open_results(options.out_dir / "results.csv");

  std::vector<BenchResult> results;
  for (const Job& job : jobs) {
    for (const auto& [spec, config] : variants) {
      BenchResult result;
      result.instance = job.id;
      result.variant = spec.name;
      result.n = job.n;
      result.seed = job.seed;
      std::vector<TraceRow> trace;
      try {
        const DcProblem problem = job.build();
        const Vector x0 = initial_point(problem.lmo->region());
        const auto start = std::chrono::steady_clock::now();
        const DcaResult solved = dca_solve(problem, x0, config);
        result.wall_seconds = std::chrono::duration<double>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
        const RunRecord& record = solved.record;
        result.solved = record.converged();
        result.outer_iterations = static_cast<int64_t>(record.iterations.size());
        result.lmo_calls = problem.lmo->calls();
        result.final_objective = record.final_objective();
        result.reason = std::string(to_string(record.termination));
        trace = trace_rows(record);
      } catch (const std::exception& e) {
        spdlog::error("{} / {} failed: {}", job.id, spec.name, e.what());
        result.solved = false;
        result.reason = std::string("error: ") + e.what();
      }
      write_trace_file(options.out_dir / trace_path(job.id, spec.name), trace);
      write_result_row(index, result);
      index.flush();
      if (!index) throw IoError("cannot write results.csv");
      results.push_back(result);
      if (options.on_result) options.on_result(result);
    }
  }
  return results;
}

}  // namespace dcfw
