#include "dcfw/frank_wolfe.hpp"

#include <cmath>
#include <optional>
#include <string>

namespace dcfw {
namespace {

void validate(const FwOptions& options) {
  if (!(options.gap_tolerance > 0.0)) {
    throw ConfigError("Frank-Wolfe gap tolerance must be > 0");
  }
  if (options.max_iterations < 0) {
    throw ConfigError("Frank-Wolfe iteration cap must be >= 0");
  }
}

Vector checked_gradient(const SmoothObjective& h, const Vector& x) {
  Vector grad = h.gradient(x);
  if (grad.size() != x.size()) {
    throw ContractViolation("gradient oracle returned wrong dimension");
  }
  if (!grad.allFinite()) {
    throw OracleFailure("subproblem gradient", "non-finite value");
  }
  return grad;
}

// Evaluates the termination tests in their documented order. Returns the
// reason when the solve should stop at the current point.
std::optional<FwTermination> should_stop(const SmoothObjective& h,
                                         const Vector& x, double gap,
                                         const StopRule& stop,
                                         const FwOptions& options,
                                         int64_t iterations,
                                         std::optional<double>& value) {
  if (gap <= options.gap_tolerance) return FwTermination::kGapTolerance;
  if (stop.needs_value()) value = h.value(x);
  if (stop.fires(gap, value.value_or(0.0))) return FwTermination::kStopRule;
  if (iterations >= options.max_iterations) return FwTermination::kIterationCap;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(FwTermination termination) {
  switch (termination) {
    case FwTermination::kGapTolerance:
      return "gap_tolerance";
    case FwTermination::kStopRule:
      return "stop_rule";
    case FwTermination::kIterationCap:
      return "iteration_cap";
  }
  return "unknown";
}

double fw_gap(const Vector& grad, const Vector& x, const Vector& v) {
  return grad.dot(x - v);
}

FwResult vanilla_fw(const SmoothObjective& h, LinearMinimizationOracle& lmo,
                    const Vector& x0, const StopRule& stop,
                    const FwOptions& options, ActiveSet* tracked) {
  validate(options);
  if (x0.size() != lmo.dimension()) {
    throw ContractViolation("starting point dimension does not match LMO");
  }
  if (tracked != nullptr && tracked->dimension() != x0.size()) {
    throw ContractViolation("tracked active set dimension mismatch");
  }

  FwResult result{x0, {}};
  Vector& x = result.x;
  FwStats& stats = result.stats;
  const int64_t calls_before = lmo.calls();

  while (true) {
    const Vector grad = checked_gradient(h, x);
    const Vector v = lmo(grad);
    const double gap = fw_gap(grad, x, v);
    stats.final_fw_gap = gap;

    std::optional<double> value;
    if (auto reason = should_stop(h, x, gap, stop, options, stats.iterations,
                                  value)) {
      stats.termination = *reason;
      break;
    }

    const Vector direction = v - x;
    const LineSearchResult step = line_search_step(
        options.line_search, h, x, direction, 1.0, stats.iterations, value);
    if (!(step.gamma >= 0.0 && step.gamma <= 1.0)) {
      throw InternalError("line search returned step outside [0, 1]");
    }
    if (tracked != nullptr) {
      tracked->frank_wolfe_update(v, step.gamma);
      x = tracked->iterate();
    } else if (step.gamma == 1.0) {
      x = v;
    } else {
      x.noalias() += step.gamma * direction;
    }
    ++stats.iterations;
    ++stats.frank_wolfe_steps;
    if (options.on_step) {
      options.on_step({stats.iterations, x, StepType::kFrankWolfe, step.gamma,
                       1.0, gap, tracked, -1});
    }
  }
  stats.lmo_calls = lmo.calls() - calls_before;
  return result;
}

BpcgResult bpcg(const SmoothObjective& h, LinearMinimizationOracle& lmo,
                ActiveSet init, const StopRule& stop,
                const FwOptions& options) {
  validate(options);
  if (init.size() == 0) throw ContractViolation("BPCG needs a nonempty set");
  if (init.dimension() != lmo.dimension()) {
    throw ContractViolation("active set dimension does not match LMO");
  }

  BpcgResult result{init.iterate(), std::move(init), {}};
  ActiveSet& active = result.active_set;
  FwStats& stats = result.stats;
  const int64_t calls_before = lmo.calls();

  while (true) {
    const Vector& x = active.iterate();
    const Vector grad = checked_gradient(h, x);

    std::size_t away = 0, local = 0;
    double away_score = -INFINITY, local_score = INFINITY;
    const auto& atoms = active.atoms();
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      const double score = grad.dot(atoms[i].vertex);
      if (score > away_score) {
        away_score = score;
        away = i;
      }
      if (score < local_score) {
        local_score = score;
        local = i;
      }
    }

    const Vector w = lmo(grad);
    const double global_gap = fw_gap(grad, x, w);
    stats.final_fw_gap = global_gap;

    std::optional<double> value;
    if (auto reason = should_stop(h, x, global_gap, stop, options,
                                  stats.iterations, value)) {
      stats.termination = *reason;
      break;
    }

    const double local_gap = away_score - local_score;
    StepType type;
    double gamma;
    double gamma_max;
    std::ptrdiff_t dropped = -1;
    if (away != local && local_gap >= global_gap) {
      gamma_max = atoms[away].weight;
      const Vector direction = atoms[local].vertex - atoms[away].vertex;
      gamma = line_search_step(options.line_search, h, x, direction, gamma_max,
                               stats.iterations, value)
                  .gamma;
      if (!(gamma >= 0.0 && gamma <= gamma_max)) {
        throw InternalError("line search returned step outside [0, " +
                            std::to_string(gamma_max) + "]");
      }
      if (active.pairwise_update(away, local, gamma)) {
        type = StepType::kPairwiseDrop;
        dropped = static_cast<std::ptrdiff_t>(away);
        ++stats.pairwise_drop_steps;
      } else {
        type = StepType::kPairwiseDescent;
        ++stats.pairwise_descent_steps;
      }
    } else {
      gamma_max = 1.0;
      const Vector direction = w - x;
      gamma = line_search_step(options.line_search, h, x, direction, gamma_max,
                               stats.iterations, value)
                  .gamma;
      if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw InternalError("line search returned step outside [0, 1]");
      }
      active.frank_wolfe_update(w, gamma);
      type = StepType::kFrankWolfe;
      ++stats.frank_wolfe_steps;
    }
    ++stats.iterations;
    if (options.on_step) {
      options.on_step({stats.iterations, active.iterate(), type, gamma,
                       gamma_max, global_gap, &active, dropped});
    }
  }
  result.x = active.iterate();
  stats.lmo_calls = lmo.calls() - calls_before;
  return result;
}

}  // namespace dcfw
