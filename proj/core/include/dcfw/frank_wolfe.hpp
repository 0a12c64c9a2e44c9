#pragma once

#include <cstdint>
#include <functional>
#include <string_view>

#include "dcfw/active_set.hpp"
#include "dcfw/common.hpp"
#include "dcfw/line_search.hpp"
#include "dcfw/lmo.hpp"
#include "dcfw/objective.hpp"
#include "dcfw/stop_rule.hpp"

namespace dcfw {

enum class StepType { kFrankWolfe, kPairwiseDescent, kPairwiseDrop };

enum class FwTermination { kGapTolerance, kStopRule, kIterationCap };

std::string_view to_string(FwTermination termination);

struct FwStats {
  int64_t iterations = 0;
  int64_t lmo_calls = 0;
  // Frank-Wolfe gap at the returned point.
  double final_fw_gap = 0.0;
  int64_t frank_wolfe_steps = 0;
  int64_t pairwise_descent_steps = 0;
  int64_t pairwise_drop_steps = 0;
  FwTermination termination = FwTermination::kIterationCap;
};

// Reported after every step.
struct FwStepInfo {
  int64_t iteration;  // steps taken so far, including this one
  const Vector& x;    // iterate after the step
  StepType step;
  double gamma;
  double gamma_max;
  double fw_gap;                  // gap at the point the step started from
  const ActiveSet* active_set;     // null when no set is maintained
  std::ptrdiff_t dropped_atom;     // index removed by a drop step, else -1
};

struct FwOptions {
  double gap_tolerance = 5e-7;
  int64_t max_iterations = 10000;
  LineSearch line_search = SecantSearch{};
  std::function<void(const FwStepInfo&)> on_step;
};

struct FwResult {
  Vector x;
  FwStats stats;
};

struct BpcgResult {
  Vector x;
  ActiveSet active_set;
  FwStats stats;
};

// <grad, x - v>.
double fw_gap(const Vector& grad, const Vector& x, const Vector& v);

// Vanilla Frank-Wolfe from x0. Stops when the gap falls below
// options.gap_tolerance, when `stop` fires, or after max_iterations steps.
// When `tracked` is non-null it must represent x0 and is updated alongside
// the iterate.
FwResult vanilla_fw(const SmoothObjective& h, LinearMinimizationOracle& lmo,
                    const Vector& x0, const StopRule& stop,
                    const FwOptions& options, ActiveSet* tracked = nullptr);

// Blended Pairwise Conditional Gradients started from `init`.
//
// Each iteration compares the local pairwise gap <grad, a - s> between the
// away atom a (max <grad, v>) and the local Frank-Wolfe atom s (min) with
// the global gap <grad, x - w>, w = LMO(grad). A local gap at least as large
// triggers a pairwise step moving weight from a to s (dropping a when the
// full weight moves); otherwise a Frank-Wolfe step towards w is taken.
// Exactly one LMO call is made per iteration.
BpcgResult bpcg(const SmoothObjective& h, LinearMinimizationOracle& lmo,
                ActiveSet init, const StopRule& stop, const FwOptions& options);

}  // namespace dcfw
