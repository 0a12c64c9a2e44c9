#include "dcfw/dca.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>
#include <utility>

#include <spdlog/spdlog.h>

namespace dcfw {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void validate_problem(const DcProblem& problem) {
  if (!problem.f_value || !problem.f_grad || !problem.g_value ||
      !problem.g_subgrad) {
    throw ConfigError("DC problem is missing an oracle");
  }
  if (!problem.lmo) throw ConfigError("DC problem has no LMO");
  if (problem.dimension < 1) throw ConfigError("DC problem dimension must be >= 1");
  if (problem.lmo->dimension() != problem.dimension) {
    throw ConfigError("DC problem dimension " +
                      std::to_string(problem.dimension) +
                      " does not match LMO dimension " +
                      std::to_string(problem.lmo->dimension()));
  }
}

double checked_phi(const DcProblem& problem, const Vector& x) {
  const double f = problem.f_value(x);
  if (!std::isfinite(f)) throw OracleFailure("f_value", "non-finite value");
  const double g = problem.g_value(x);
  if (!std::isfinite(g)) throw OracleFailure("g_value", "non-finite value");
  return f - g;
}

}  // namespace

Subproblem::Subproblem(const DcProblem& parent, Vector anchor,
                       double g_at_anchor, Vector g_grad_at_anchor,
                       double phi_at_anchor)
    : parent_(&parent),
      anchor_(std::move(anchor)),
      g_at_anchor_(g_at_anchor),
      g_grad_at_anchor_(std::move(g_grad_at_anchor)),
      phi_at_anchor_(phi_at_anchor) {}

double Subproblem::value(const Vector& x) const {
  return parent_->f_value(x) - g_at_anchor_ - g_grad_at_anchor_.dot(x - anchor_);
}

Vector Subproblem::gradient(const Vector& x) const {
  return parent_->f_grad(x) - g_grad_at_anchor_;
}

SmoothObjective Subproblem::objective() const {
  return {[this](const Vector& x) { return value(x); },
          [this](const Vector& x) { return gradient(x); }};
}

Subproblem linearize(const DcProblem& problem, const Vector& x_t) {
  const double g = problem.g_value(x_t);
  if (!std::isfinite(g)) throw OracleFailure("g_value", "non-finite value");
  Vector grad = problem.g_subgrad(x_t);
  if (grad.size() != x_t.size()) {
    throw ContractViolation("g_subgrad returned wrong dimension");
  }
  if (!grad.allFinite()) {
    throw OracleFailure("g_subgrad", "non-finite subgradient");
  }
  const double f = problem.f_value(x_t);
  if (!std::isfinite(f)) throw OracleFailure("f_value", "non-finite value");
  return Subproblem(problem, x_t, g, std::move(grad), f - g);
}

StopRule make_stop_rule(StopMode mode, const Subproblem& sub,
                        std::optional<double> fixed_epsilon) {
  switch (mode) {
    case StopMode::kAdaptive:
      return StopRule::adaptive(sub.phi_at_anchor());
    case StopMode::kFixedEpsilon:
      if (!fixed_epsilon) {
        throw ConfigError("fixed-epsilon stop rule needs an epsilon");
      }
      return StopRule::fixed(*fixed_epsilon);
  }
  throw InternalError("unknown stop mode");
}

GapBounds dc_gap_bounds(const Subproblem& sub, const Vector& x_next,
                        double fw_gap_at_x_next) {
  const double lower = sub.phi_at_anchor() - sub.value(x_next);
  // The gap is nonnegative; a tiny negative value is roundoff.
  return {lower, lower + std::max(fw_gap_at_x_next, 0.0)};
}

BoostResult boosted_step(const DcProblem& problem, const Vector& x_t,
                         const Vector& x_candidate) {
  const Vector d = x_candidate - x_t;
  if (d.isZero(0.0)) return {x_candidate, 1.0};
  auto phi = [&](double gamma) { return problem.phi(x_t + gamma * d); };
  const double gamma = grid_two_level_minimize(phi, 0.0, 1.0, 11, true);
  if (gamma == 1.0) return {x_candidate, 1.0};
  return {x_t + gamma * d, gamma};
}

void DcaConfig::validate() const {
  if (max_outer_iterations < 1) throw ConfigError("outer iteration cap must be >= 1");
  if (max_inner_iterations < 1) throw ConfigError("inner iteration cap must be >= 1");
  if (!(dca_gap_tolerance > 0.0)) throw ConfigError("DCA gap tolerance must be > 0");
  if (!(fw_gap_tolerance > 0.0)) {
    throw ConfigError("Frank-Wolfe gap tolerance must be > 0");
  }
  if (fixed_epsilon && !(*fixed_epsilon > 0.0)) {
    throw ConfigError("fixed epsilon must be > 0");
  }
  if (time_limit_seconds && !(*time_limit_seconds > 0.0)) {
    throw ConfigError("time limit must be > 0");
  }
  if (warm_start && subsolver != Subsolver::kBpcg) {
    throw ConfigError("warm start requires the BPCG subsolver");
  }
}

std::string_view to_string(DcaTermination termination) {
  switch (termination) {
    case DcaTermination::kConverged:
      return "converged";
    case DcaTermination::kOuterIterationCap:
      return "outer_iteration_cap";
    case DcaTermination::kTimeLimit:
      return "time_limit";
    case DcaTermination::kStalled:
      return "stalled";
  }
  return "unknown";
}

DcaResult dca_solve(const DcProblem& problem, const Vector& x0,
                    const DcaConfig& config) {
  config.validate();
  validate_problem(problem);
  LinearMinimizationOracle& lmo = *problem.lmo;
  if (!region_contains(lmo.region(), x0, 1e-9)) {
    throw ContractViolation("x0 is not feasible for " +
                            region_name(lmo.region()));
  }

  const auto start = Clock::now();
  const int64_t calls_before = lmo.calls();
  const bool warm = config.warm_start && config.subsolver == Subsolver::kBpcg;

  DcaResult result{x0, {}};
  Vector& x = result.x;
  RunRecord& record = result.record;
  record.initial_objective = checked_phi(problem, x0);

  FwOptions fw;
  fw.gap_tolerance = config.fw_gap_tolerance;
  fw.max_iterations = config.max_inner_iterations;
  fw.line_search = config.line_search;
  const double epsilon = config.fixed_epsilon.value_or(config.fw_gap_tolerance);

  // Active set representing x (or, after a stall, the partial subsolve of the
  // current h_t). Empty until the first BPCG subsolve.
  std::optional<ActiveSet> carried;

  for (int64_t t = 0;; ++t) {
    if (t >= config.max_outer_iterations) {
      record.termination = DcaTermination::kOuterIterationCap;
      break;
    }
    if (config.time_limit_seconds &&
        seconds_since(start) >= *config.time_limit_seconds) {
      record.termination = DcaTermination::kTimeLimit;
      break;
    }

    Vector x_next;
    FwStats stats;
    std::optional<ActiveSet> out_set;
    std::optional<ActiveSet> anchor_set;
    GapBounds bounds{};
    double phi_anchor = 0.0;
    try {
      const Subproblem sub = linearize(problem, x);
      phi_anchor = sub.phi_at_anchor();
      const StopRule stop = make_stop_rule(config.stop_mode, sub, epsilon);
      const SmoothObjective h = sub.objective();
      if (config.subsolver == Subsolver::kVanillaFrankWolfe) {
        FwResult r = vanilla_fw(h, lmo, x, stop, fw);
        x_next = std::move(r.x);
        stats = r.stats;
      } else {
        std::optional<ActiveSet> init;
        if (warm && carried) {
          init = *carried;
          if (config.boosted) anchor_set = carried;
        } else {
          init.emplace(lmo(sub.gradient(x)));
        }
        BpcgResult r = bpcg(h, lmo, std::move(*init), stop, fw);
        x_next = std::move(r.x);
        out_set = std::move(r.active_set);
        stats = r.stats;
      }
      bounds = dc_gap_bounds(sub, x_next, stats.final_fw_gap);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw SubsolverFailure(t, e.what());
    }

    OuterIteration row;
    row.t = t;
    row.dc_gap_lb = bounds.lower;
    row.dc_gap_ub = bounds.upper;
    row.fw_gap_final = stats.final_fw_gap;
    row.inner_iters = stats.iterations;
    row.inner_termination = stats.termination;

    if (bounds.lower < 0.0) {
      row.stalled = true;
      row.objective = phi_anchor;
      ++record.stall_events;
      spdlog::warn("DCA iteration {}: subsolver ended above phi(x_t) "
                   "(lb = {:.3e}); keeping x_t",
                   t, bounds.lower);
      // Continue the same subproblem from where the subsolver stopped.
      if (warm) carried = std::move(out_set);
    } else {
      if (config.boosted) {
        BoostResult boost = boosted_step(problem, x, x_next);
        if (warm) {
          if (boost.gamma == 1.0) {
            carried = std::move(out_set);
          } else if (anchor_set) {
            anchor_set->blend(*out_set, boost.gamma);
            carried = std::move(anchor_set);
          } else {
            carried.reset();
          }
        }
        x = std::move(boost.x);
      } else {
        if (warm) carried = std::move(out_set);
        x = std::move(x_next);
      }
      row.objective = checked_phi(problem, x);
    }
    row.lmo_calls_cum = lmo.calls() - calls_before;
    row.elapsed_seconds = seconds_since(start);
    record.iterations.push_back(row);

    if (bounds.upper <= config.dca_gap_tolerance) {
      record.termination = DcaTermination::kConverged;
      break;
    }
    if (row.stalled && !warm) {
      record.termination = DcaTermination::kStalled;
      break;
    }
  }
  return result;
}

}  // namespace dcfw
