// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any check fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <spdlog/spdlog.h>

#include "dcfw/bench.hpp"
#include "dcfw/dca.hpp"
#include "dcfw/frank_wolfe.hpp"
#include "dcfw/line_search.hpp"
#include "dcfw/lmo.hpp"
#include "dcfw/problems.hpp"
#include "dcfw/qaplib.hpp"
#include "dcfw/statistics.hpp"
#include "oracles.hpp"

namespace {

using namespace dcfw;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

Vector uniform(Index n) { return Vector::Constant(n, 1.0 / static_cast<double>(n)); }

struct QuadRun {
  std::string variant;
  Index n;
  uint64_t seed;
  RunRecord record;
};

// Every default variant on quadratics n in {10, 20, 30}, seeds 1..5. Shared
// by the first three criteria; ES and fixed runs are timed separately.
struct QuadRuns {
  std::vector<QuadRun> runs;
  double adaptive_seconds = 0.0;
};

const QuadRuns& quadratic_runs() {
  static const QuadRuns cached = [] {
    QuadRuns out;
    SolverSettings settings;
    settings.caps = {200, 10000};
    for (Index n : {10, 20, 30}) {
      for (uint64_t seed = 1; seed <= 5; ++seed) {
        const QuadraticDcInstance inst = gen_quadratic_dc(n, seed);
        for (const std::string& name : default_variants()) {
          const VariantSpec spec = make_variant(name);
          const DcProblem p = make_problem(inst);
          const auto start = Clock::now();
          DcaResult r = dca_solve(p, uniform(n), make_config(spec, settings));
          if (spec.stop_mode == StopMode::kAdaptive) out.adaptive_seconds += seconds_since(start);
          out.runs.push_back({name, n, seed, std::move(r.record)});
        }
      }
    }
    return out;
  }();
  return cached;
}

std::string run_label(const QuadRun& r) {
  return r.variant + " n=" + std::to_string(r.n) + " seed=" + std::to_string(r.seed);
}

bool adaptive(const QuadRun& r) {
  return make_variant(r.variant).stop_mode == StopMode::kAdaptive;
}

Outcome ac1_rate_certificate() {
  Outcome out;
  const QuadRuns& all = quadratic_runs();
  int checked = 0;
  for (const QuadRun& r : all.runs) {
    if (!adaptive(r) || r.record.iterations.empty()) continue;
    ++checked;
    double min_lb = INFINITY;
    for (const auto& row : r.record.iterations) min_lb = std::min(min_lb, row.dc_gap_lb);
    const double T1 = static_cast<double>(r.record.iterations.size());
    const double bound =
        2.0 * (r.record.initial_objective - r.record.final_objective()) / T1 + 1e-9;
    if (!(min_lb <= bound)) {
      out.fail(run_label(r) + ": min lb " + fmt_double(min_lb) + " > " + fmt_double(bound));
    }
  }
  if (all.adaptive_seconds >= 60.0) {
    out.fail("adaptive runs took " + fmt_double(all.adaptive_seconds) + " s");
  }
  if (out.pass) {
    out.detail = std::to_string(checked) + " adaptive runs, " +
                 fmt_double(all.adaptive_seconds) + " s";
  }
  return out;
}

Outcome ac2_monotone_descent() {
  Outcome out;
  int steps = 0, runs = 0;
  auto check = [&](const std::string& label, const RunRecord& record) {
    ++runs;
    double previous = record.initial_objective;
    for (const auto& row : record.iterations) {
      ++steps;
      if (!(row.objective <= previous + 1e-9)) {
        out.fail(label + " t=" + std::to_string(row.t) + ": " + fmt_double(row.objective) +
                 " > " + fmt_double(previous));
      }
      previous = row.objective;
    }
  };
  for (const QuadRun& r : quadratic_runs().runs) {
    if (adaptive(r)) check(run_label(r), r.record);
  }
  // Boosted and hard-family runs as well.
  SolverSettings settings;
  for (uint64_t seed = 1; seed <= 3; ++seed) {
    const DcProblem q = make_problem(gen_quadratic_dc(20, seed));
    check("DCA-BPCG-WS-ES-BT quad seed=" + std::to_string(seed),
          dca_solve(q, uniform(20), make_config(make_variant("DCA-BPCG-WS-ES-BT"), settings))
              .record);
    const DcProblem h = make_problem(gen_hard_dc(20, seed));
    check("DCA-BPCG-WS-ES hard seed=" + std::to_string(seed),
          dca_solve(h, Vector::Zero(20), make_config(make_variant("DCA-BPCG-WS-ES"), settings))
              .record);
  }
  if (out.pass) {
    out.detail = std::to_string(runs) + " runs, " + std::to_string(steps) + " outer steps";
  }
  return out;
}

Outcome ac3_fixed_epsilon_slack() {
  Outcome out;
  const double eps = 5e-7;
  int steps = 0, runs = 0;
  for (const QuadRun& r : quadratic_runs().runs) {
    if (adaptive(r)) continue;
    ++runs;
    double previous = r.record.initial_objective;
    for (const auto& row : r.record.iterations) {
      ++steps;
      if (!(previous - row.objective >= row.dc_gap_lb - eps - 1e-9)) {
        out.fail(run_label(r) + " t=" + std::to_string(row.t) + ": descent " +
                 fmt_double(previous - row.objective) + " < lb " + fmt_double(row.dc_gap_lb));
      }
      previous = row.objective;
    }
  }
  if (out.pass) {
    out.detail = std::to_string(runs) + " fixed-epsilon runs, " + std::to_string(steps) +
                 " outer steps";
  }
  return out;
}

Outcome ac4_vanilla_fw_rate() {
  Outcome out;
  const auto start = Clock::now();
  const Index n = 50;
  std::mt19937_64 rng(404);
  const Matrix m = testing::random_matrix(rng, n, n);
  const Matrix Q = m.transpose() * m + 0.1 * Matrix::Identity(n, n);
  const Vector q = testing::random_vector(rng, n, -5, 5);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(Q, Eigen::EigenvaluesOnly);
  const double L = eig.eigenvalues().maxCoeff();
  const double D2 = 2.0;

  const Vector star = testing::simplex_qp_active_set(Q, q);
  const double kkt = testing::simplex_qp_kkt_residual(Q, q, star);
  if (kkt > 1e-9) out.fail("reference solve has KKT residual " + fmt_double(kkt));
  auto h_value = [&](const Vector& x) { return 0.5 * x.dot(Q * x) + q.dot(x); };
  const double h_star = h_value(star);

  const SmoothObjective h{h_value, [&](const Vector& x) -> Vector { return Q * x + q; }};
  LinearMinimizationOracle lmo(ProbabilitySimplex{n});
  FwOptions options;
  options.gap_tolerance = 1e-300;
  options.max_iterations = 1000;
  options.line_search = AgnosticStep{};
  double worst = -INFINITY;
  int64_t last = 0;
  options.on_step = [&](const FwStepInfo& info) {
    last = info.iteration;
    const double excess = h_value(info.x) - h_star;
    const double bound = 2.0 * L * D2 / (static_cast<double>(info.iteration) + 2.0);
    worst = std::max(worst, excess / bound);
    if (!(excess <= bound)) {
      out.fail("k=" + std::to_string(info.iteration) + ": " + fmt_double(excess) + " > " +
               fmt_double(bound));
    }
  };
  vanilla_fw(h, lmo, Vector::Unit(n, 0), StopRule::fixed(1e-300), options);
  if (last < 1000) out.fail("FW stopped after " + std::to_string(last) + " steps");
  const double elapsed = seconds_since(start);
  if (elapsed >= 5.0) out.fail("took " + fmt_double(elapsed) + " s");
  if (out.pass) {
    out.detail = "k=1..1000, max excess/bound " + fmt_double(worst) + ", " +
                 fmt_double(elapsed) + " s";
  }
  return out;
}

Outcome ac5_secant_on_quadratics() {
  Outcome out;
  std::mt19937_64 rng(505);
  std::uniform_int_distribution<int> size(2, 20);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int unclamped = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Index n = size(rng);
    const Matrix m = testing::random_matrix(rng, n, n);
    const Matrix Q = m.transpose() * m + 0.01 * Matrix::Identity(n, n);
    const Vector q = testing::random_vector(rng, n, -3, 3);
    const Vector x = testing::random_simplex_point(rng, n);
    Vector d = testing::random_vector(rng, n);
    double gamma_max = 1.0;
    if (trial % 2 == 1) gamma_max = 0.01 + unit(rng);
    if (trial % 3 == 2) d *= 10.0;
    const SmoothObjective h{[&](const Vector& y) { return 0.5 * y.dot(Q * y) + q.dot(y); },
                            [&](const Vector& y) -> Vector { return Q * y + q; }};
    const double curvature = d.dot(Q * d);
    const double slope0 = (Q * x + q).dot(d);
    const double exact = std::clamp(-slope0 / curvature, 0.0, gamma_max);
    const LineSearchResult r = secant_line_search(h, x, d, gamma_max);
    const double err = std::abs(r.gamma - exact);
    worst = std::max(worst, err);
    if (err > 1e-10) {
      out.fail("trial " + std::to_string(trial) + ": gamma " + fmt_double(r.gamma) +
               " vs " + fmt_double(exact));
    }
    if (exact > 0.0 && exact < gamma_max) {
      ++unclamped;
      if (r.derivative_evaluations != 2) {
        out.fail("trial " + std::to_string(trial) + ": " +
                 std::to_string(r.derivative_evaluations) + " derivative evaluations");
      }
    }
    if (r.used_fallback) out.fail("trial " + std::to_string(trial) + " used the grid fallback");
  }
  if (out.pass) {
    out.detail = "1000 cases (" + std::to_string(unclamped) + " unclamped), max error " +
                 fmt_double(worst);
  }
  return out;
}

Outcome ac6_hungarian() {
  Outcome out;
  const auto start = Clock::now();
  std::mt19937_64 rng(606);
  std::uniform_int_distribution<int> size(1, 7);
  std::uniform_int_distribution<int> integer(-50, 50);
  std::uniform_real_distribution<double> real(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = size(rng);
    Matrix c(n, n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        c(i, j) = trial % 2 == 0 ? static_cast<double>(integer(rng)) : real(rng);
      }
    }
    const Matrix X = birkhoff_lmo(c);
    double cost = 0.0;
    for (Index i = 0; i < n; ++i) {
      Index col = -1;
      for (Index j = 0; j < n; ++j) {
        if (X(i, j) == 1.0) col = j;
      }
      if (col < 0 || X.row(i).sum() != 1.0 || X.col(i).sum() != 1.0) {
        out.fail("trial " + std::to_string(trial) + ": not a permutation matrix");
        break;
      }
      cost += c(i, col);
    }
    const double brute = testing::brute_force_assignment(c);
    if (cost != brute) {
      out.fail("trial " + std::to_string(trial) + ": " + fmt_double(cost) + " vs " +
               fmt_double(brute));
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 10.0) out.fail("took " + fmt_double(elapsed) + " s");
  if (out.pass) out.detail = "200 matrices, n <= 7, " + fmt_double(elapsed) + " s";
  return out;
}

Outcome ac7_qap_identity() {
  Outcome out;
  std::mt19937_64 rng(707);
  double worst = 0.0;
  for (Index n : {2, 4, 6, 8, 10}) {
    const QapInstance inst{"random", n, testing::random_matrix(rng, n, n, -10, 10),
                           testing::random_matrix(rng, n, n, -10, 10)};
    const DcProblem p = qap_dc_oracles(inst);
    for (int i = 0; i < 20; ++i) {
      const Matrix X = testing::random_matrix(rng, n, n, -1, 1);
      const double reference = (inst.A.transpose() * X).cwiseProduct(X * inst.B).sum();
      const double rel = std::abs(p.phi(flatten(X)) - reference) / std::abs(reference);
      worst = std::max(worst, rel);
      if (!(rel <= 1e-9)) {
        out.fail("n=" + std::to_string(n) + ": relative error " + fmt_double(rel));
      }
    }
  }
  if (out.pass) out.detail = "5 instances x 20 matrices, max rel error " + fmt_double(worst);
  return out;
}

Outcome ac8_gradients() {
  Outcome out;
  std::mt19937_64 rng(808);
  double worst = 0.0;
  auto check = [&](const std::string& family, const DcProblem& p, const Vector& x) {
    const double ef = testing::relative_error(p.f_grad(x), testing::central_difference(p.f_value, x));
    const double eg =
        testing::relative_error(p.g_subgrad(x), testing::central_difference(p.g_value, x));
    worst = std::max({worst, ef, eg});
    if (!(ef <= 1e-5 && eg <= 1e-5)) {
      out.fail(family + ": relative errors " + fmt_double(ef) + ", " + fmt_double(eg));
    }
  };
  const DcProblem quad = make_problem(gen_quadratic_dc(10, 8));
  const HardDcInstance hard_inst = gen_hard_dc(12, 8);
  const DcProblem hard = make_problem(hard_inst);
  const QapInstance qap_inst{"random", 5, testing::random_matrix(rng, 5, 5, 0, 10),
                             testing::random_matrix(rng, 5, 5, 0, 10)};
  const DcProblem qap = qap_dc_oracles(qap_inst);
  for (int i = 0; i < 10; ++i) {
    check("quadratic", quad, testing::random_simplex_point(rng, 10));
    check("hard", hard,
          testing::random_combination(
              rng,
              [&](std::mt19937_64& r) {
                return testing::random_ksparse_vertex(r, 12, hard_inst.k, hard_inst.tau);
              },
              4));
    check("qap", qap,
          testing::random_combination(
              rng, [](std::mt19937_64& r) { return testing::random_permutation_vertex(r, 5); },
              3));
  }
  if (out.pass) out.detail = "3 families x 10 points, max rel error " + fmt_double(worst);
  return out;
}

double shifted_geomean_of(const std::vector<double>& v) { return shifted_geomean(v, 1.0); }

Outcome ac9_efficiency() {
  Outcome out;
  const auto start = Clock::now();
  SolverSettings settings;
  settings.caps = {200, 10000};
  settings.tolerance = 1e-6;
  std::vector<double> fw_calls, bpcg_calls;
  int solved = 0;
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    const QuadraticDcInstance inst = gen_quadratic_dc(100, seed);
    {
      const DcProblem p = make_problem(inst);
      const DcaResult r =
          dca_solve(p, uniform(100), make_config(make_variant("DCA-BPCG-WS-ES"), settings));
      solved += r.record.converged();
      bpcg_calls.push_back(static_cast<double>(r.record.lmo_calls()));
    }
    {
      const DcProblem p = make_problem(inst);
      const DcaResult r =
          dca_solve(p, uniform(100), make_config(make_variant("DCA-FW"), settings));
      fw_calls.push_back(static_cast<double>(r.record.lmo_calls()));
    }
  }
  const double bpcg = shifted_geomean_of(bpcg_calls);
  const double fw = shifted_geomean_of(fw_calls);
  const double elapsed = seconds_since(start);
  if (solved != 5) out.fail("DCA-BPCG-WS-ES solved " + std::to_string(solved) + " of 5");
  if (!(10.0 * bpcg <= fw)) {
    out.fail("geomean LMO calls " + fmt_double(bpcg) + " vs " + fmt_double(fw));
  }
  if (elapsed >= 600.0) out.fail("took " + fmt_double(elapsed) + " s");
  out.detail = (out.pass ? "" : out.detail + "; ") + "solved " + std::to_string(solved) +
               "/5, geomean LMO calls " + fmt_double(bpcg) + " vs DCA-FW " + fmt_double(fw) +
               " (" + fmt_double(fw / bpcg) + "x), " + fmt_double(elapsed) + " s";
  return out;
}

Outcome ac10_active_set() {
  Outcome out;
  std::mt19937_64 rng(1010);
  int64_t steps = 0, drops = 0, restarts = 0;

  auto audit = [&](const SmoothObjective& h, LinearMinimizationOracle& lmo, ActiveSet init) {
    std::vector<ActiveSet::Atom> before = init.atoms();
    FwOptions options;
    options.max_iterations = 400;
    options.gap_tolerance = 1e-9;
    options.on_step = [&](const FwStepInfo& info) {
      ++steps;
      const ActiveSet& s = *info.active_set;
      for (const auto& atom : s.atoms()) {
        if (!(atom.weight > 0.0)) out.fail("non-positive weight " + fmt_double(atom.weight));
      }
      if (s.weight_sum_error() > 1e-12) {
        out.fail("weight sum off by " + fmt_double(s.weight_sum_error()));
      }
      if (s.iterate_error() > 1e-10) {
        out.fail("cached iterate off by " + fmt_double(s.iterate_error()));
      }
      if ((s.iterate() - info.x).cwiseAbs().maxCoeff() != 0.0) {
        out.fail("reported iterate differs from the active set");
      }
      if (info.step == StepType::kPairwiseDrop) {
        ++drops;
        const Vector& gone = before[static_cast<std::size_t>(info.dropped_atom)].vertex;
        if (s.size() + 1 != before.size() || s.find(gone) >= 0) {
          out.fail("drop step did not remove its atom");
        }
      }
      before = s.atoms();
    };
    const BpcgResult solved = bpcg(h, lmo, std::move(init), StopRule::fixed(1e-9), options);
    if (solved.stats.termination == FwTermination::kIterationCap) return;
    FwOptions again;
    again.gap_tolerance = 1e-9;
    const BpcgResult warm = bpcg(h, lmo, solved.active_set, StopRule::fixed(1e-9), again);
    ++restarts;
    if (warm.stats.iterations > 1) {
      out.fail("warm restart took " + std::to_string(warm.stats.iterations) + " iterations");
    }
  };

  for (int trial = 0; steps < 1000 || trial < 12; ++trial) {
    const Index n = 5 + trial % 20;
    const Matrix m = testing::random_matrix(rng, n, n);
    const Matrix Q = m.transpose() * m + 0.1 * Matrix::Identity(n, n);
    const Vector q = testing::random_vector(rng, n, -2, 2);
    const SmoothObjective h{[Q, q](const Vector& x) { return 0.5 * x.dot(Q * x) + q.dot(x); },
                            [Q, q](const Vector& x) -> Vector { return Q * x + q; }};
    switch (trial % 3) {
      case 0: {
        LinearMinimizationOracle lmo(ProbabilitySimplex{n});
        audit(h, lmo, ActiveSet(Vector::Unit(n, trial % n)));
        break;
      }
      case 1: {
        const Index k = 1 + trial % 3;
        LinearMinimizationOracle lmo(KSparsePolytope{n, 1.0, k});
        audit(h, lmo, ActiveSet(testing::random_ksparse_vertex(rng, n, k, 1.0)));
        break;
      }
      default: {
        const Index side = 2 + trial % 4;
        const Matrix mm = testing::random_matrix(rng, side * side, side * side);
        const Matrix QQ = mm.transpose() * mm + 0.1 * Matrix::Identity(side * side, side * side);
        const Vector qq = testing::random_vector(rng, side * side, -2, 2);
        const SmoothObjective hh{
            [QQ, qq](const Vector& x) { return 0.5 * x.dot(QQ * x) + qq.dot(x); },
            [QQ, qq](const Vector& x) -> Vector { return QQ * x + qq; }};
        LinearMinimizationOracle lmo(Birkhoff{side});
        audit(hh, lmo, ActiveSet(testing::random_permutation_vertex(rng, side)));
      }
    }
  }
  if (drops == 0) out.fail("no drop step was exercised");
  if (restarts == 0) out.fail("no subproblem was solved for the warm restart check");
  if (out.pass) {
    out.detail = std::to_string(steps) + " BPCG steps (" + std::to_string(drops) + " drops), " +
                 std::to_string(restarts) + " warm restarts";
  }
  return out;
}

Outcome ac11_qaplib() {
  Outcome out;
  const ParseReport report = scan_directory(std::filesystem::path(DCFW_TEST_DATA) / "qaplib");
  const std::vector<std::string> valid = {"float3", "nug4", "single1", "tiny2"};
  const std::map<std::string, std::string> invalid = {
      {"empty", "empty"},           {"extra2", "token_count"},  {"header2", "token_count"},
      {"letters2", "non_numeric"},  {"negative", "bad_dimension"},
      {"nonfinite2", "non_finite"}, {"short2", "token_count"},  {"zero", "bad_dimension"}};
  if (report.valid != valid) out.fail("unexpected valid set");
  if (report.invalid.size() != invalid.size()) out.fail("unexpected invalid count");
  for (const auto& [name, reason] : report.invalid) {
    const auto it = invalid.find(name);
    if (it == invalid.end() || reason.rfind(it->second, 0) != 0) {
      out.fail("unexpected invalid entry " + name + ": " + reason);
    }
  }

  std::mt19937_64 rng(1111);
  std::uniform_int_distribution<int> length(0, 80);
  std::uniform_int_distribution<int> byte(0, 255);
  const std::string seed_text = "3\n1 2 3\n4 5 6\n7 8 9\n9 8 7\n6 5 4\n3 2 1\n";
  const std::string alphabet = "0123456789 \n\t-+.eEinf";
  int accepted = 0, rejected = 0;
  for (int i = 0; i < 10000; ++i) {
    std::string text;
    if (i % 2 == 0) {
      text.resize(static_cast<std::size_t>(length(rng)));
      for (char& c : text) c = static_cast<char>(byte(rng));
    } else {
      text = seed_text;
      std::uniform_int_distribution<std::size_t> pos(0, text.size() - 1);
      std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
      for (int e = 0; e < 3; ++e) text[pos(rng)] = alphabet[pick(rng)];
    }
    try {
      const QapInstance inst = parse_qaplib(text);
      ++accepted;
      if (!inst.A.allFinite() || !inst.B.allFinite()) out.fail("accepted non-finite entries");
    } catch (const ParseError&) {
      ++rejected;
    } catch (const std::exception& e) {
      out.fail(std::string("unstructured error: ") + e.what());
    }
  }
  if (out.pass) {
    out.detail = std::to_string(report.valid.size()) + " valid / " +
                 std::to_string(report.invalid.size()) + " invalid files; fuzz " +
                 std::to_string(accepted) + " accepted, " + std::to_string(rejected) +
                 " rejected";
  }
  return out;
}

Outcome ac12_statistics() {
  Outcome out;
  const double g = shifted_geomean({1.0, 9.0}, 1.0);
  if (!(std::abs(g - (std::sqrt(20.0) - 1.0)) <= 1e-12)) {
    out.fail("shifted geomean " + fmt_double(g));
  }
  auto row = [](std::string inst, std::string variant, int64_t iters, bool solved) {
    BenchResult r;
    r.instance = std::move(inst);
    r.variant = std::move(variant);
    r.outer_iterations = iters;
    r.solved = solved;
    return r;
  };
  const std::vector<BenchResult> table = {row("p1", "S1", 10, true), row("p1", "S2", 20, true),
                                          row("p2", "S1", 30, true), row("p2", "S2", 15, true),
                                          row("p3", "S1", 5, false), row("p3", "S2", 40, true)};
  // theta -> (rho_S1, rho_S2), worked out by hand.
  const std::vector<std::tuple<double, double, double>> standard = {
      {0.5, 0.0, 0.0}, {1.0, 1.0 / 3, 2.0 / 3}, {1.5, 1.0 / 3, 2.0 / 3},
      {2.0, 2.0 / 3, 1.0}, {100.0, 2.0 / 3, 1.0}};
  const std::vector<std::tuple<double, double, double>> modified = {
      {0.5, 0.0, 0.0}, {1.0, 2.0 / 3, 1.0 / 3}, {2.0, 1.0, 2.0 / 3},
      {7.5, 1.0, 2.0 / 3}, {8.0, 1.0, 1.0}};
  for (bool mod : {false, true}) {
    const PerformanceProfile p = performance_profile(table, Metric::kOuterIterations, mod);
    for (const auto& [theta, s1, s2] : mod ? modified : standard) {
      if (p.rho(0, theta) != s1 || p.rho(1, theta) != s2) {
        out.fail(std::string(mod ? "modified" : "standard") + " profile at theta=" +
                 fmt_double(theta));
      }
    }
  }
  if (out.pass) out.detail = "geomean error " + fmt_double(std::abs(g - (std::sqrt(20.0) - 1.0)));
  return out;
}

}  // namespace

int main() {
  spdlog::set_level(spdlog::level::err);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 adaptive rate certificate", ac1_rate_certificate},
      {"AC2 monotone descent under adaptive stop", ac2_monotone_descent},
      {"AC3 fixed-epsilon slack", ac3_fixed_epsilon_slack},
      {"AC4 vanilla FW rate", ac4_vanilla_fw_rate},
      {"AC5 secant on quadratics", ac5_secant_on_quadratics},
      {"AC6 Hungarian vs brute force", ac6_hungarian},
      {"AC7 QAP decomposition identity", ac7_qap_identity},
      {"AC8 gradient oracles", ac8_gradients},
      {"AC9 desk-scale efficiency (n=100)", ac9_efficiency},
      {"AC10 active set and warm start", ac10_active_set},
      {"AC11 QAPLIB parsing", ac11_qaplib},
      {"AC12 bench statistics", ac12_statistics},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    failures += !outcome.pass;
    std::printf("[%s] %s: %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(),
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
