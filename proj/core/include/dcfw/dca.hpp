#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcfw/active_set.hpp"
#include "dcfw/common.hpp"
#include "dcfw/frank_wolfe.hpp"
#include "dcfw/line_search.hpp"
#include "dcfw/lmo.hpp"
#include "dcfw/objective.hpp"
#include "dcfw/stop_rule.hpp"

namespace dcfw {

// phi(x) = f(x) - g(x) over the region behind `lmo`, with f smooth convex and
// g convex. Oracles must be callable from the thread that owns the solve.
struct DcProblem {
  std::function<double(const Vector&)> f_value;
  std::function<Vector(const Vector&)> f_grad;
  std::function<double(const Vector&)> g_value;
  std::function<Vector(const Vector&)> g_subgrad;
  Index dimension = 0;
  std::shared_ptr<LinearMinimizationOracle> lmo;

  double phi(const Vector& x) const { return f_value(x) - g_value(x); }
};

// Convex majorant h_t(x) = f(x) - g(x_t) - <grad g(x_t), x - x_t>; it
// touches phi at the anchor x_t and lies above it everywhere else.
class Subproblem {
 public:
  Subproblem(const DcProblem& parent, Vector anchor, double g_at_anchor,
             Vector g_grad_at_anchor, double phi_at_anchor);

  double value(const Vector& x) const;
  Vector gradient(const Vector& x) const;

  // Oracles bound to this object; it must outlive the returned value.
  SmoothObjective objective() const;

  const Vector& anchor() const { return anchor_; }
  double g_at_anchor() const { return g_at_anchor_; }
  const Vector& g_grad_at_anchor() const { return g_grad_at_anchor_; }
  // phi(x_t), evaluated once when the subproblem is built.
  double phi_at_anchor() const { return phi_at_anchor_; }
  const DcProblem& parent() const { return *parent_; }

 private:
  const DcProblem* parent_;
  Vector anchor_;
  double g_at_anchor_;
  Vector g_grad_at_anchor_;
  double phi_at_anchor_;
};

// Builds h_t at x_t with one g_value and one g_subgrad call. Throws
// OracleFailure naming the oracle when either result is non-finite.
Subproblem linearize(const DcProblem& problem, const Vector& x_t);

enum class Subsolver { kVanillaFrankWolfe, kBpcg };
enum class StopMode { kFixedEpsilon, kAdaptive };

StopRule make_stop_rule(StopMode mode, const Subproblem& sub,
                        std::optional<double> fixed_epsilon = {});

struct GapBounds {
  double lower;  // phi(x_t) - h_t(x_next)
  double upper;  // lower + FW gap of h_t at x_next
};

// Sandwich on the DC gap at x_t given the subsolver's output and its final
// Frank-Wolfe gap: lower <= gap(x_t) <= upper. Negative gaps count as 0.
GapBounds dc_gap_bounds(const Subproblem& sub, const Vector& x_next,
                        double fw_gap_at_x_next);

struct BoostResult {
  Vector x;
  double gamma;
};

// Two-level grid search for min phi(x_t + gamma (x_candidate - x_t)) over
// gamma in [0, 1]; ties go to gamma = 1, so phi(result) <= phi(x_candidate).
BoostResult boosted_step(const DcProblem& problem, const Vector& x_t,
                         const Vector& x_candidate);

struct DcaConfig {
  int64_t max_outer_iterations = 200;
  int64_t max_inner_iterations = 10000;
  double dca_gap_tolerance = 1e-6;
  double fw_gap_tolerance = 5e-7;
  Subsolver subsolver = Subsolver::kBpcg;
  bool warm_start = true;
  StopMode stop_mode = StopMode::kAdaptive;
  bool boosted = false;
  std::optional<double> time_limit_seconds;
  // Epsilon of the fixed rule; defaults to fw_gap_tolerance.
  std::optional<double> fixed_epsilon;
  LineSearch line_search = SecantSearch{};

  // Throws ConfigError on invalid values.
  void validate() const;
};

enum class DcaTermination { kConverged, kOuterIterationCap, kTimeLimit, kStalled };

std::string_view to_string(DcaTermination termination);

struct OuterIteration {
  int64_t t = 0;
  double dc_gap_lb = 0.0;
  double dc_gap_ub = 0.0;
  double fw_gap_final = 0.0;
  double objective = 0.0;  // phi(x_{t+1})
  int64_t lmo_calls_cum = 0;
  int64_t inner_iters = 0;
  double elapsed_seconds = 0.0;
  FwTermination inner_termination = FwTermination::kIterationCap;
  // The subsolver returned a point with h_t above phi(x_t); x_t was kept.
  bool stalled = false;
};

struct RunRecord {
  std::string variant;
  uint64_t seed = 0;
  std::string instance_id;
  double initial_objective = 0.0;
  std::vector<OuterIteration> iterations;
  DcaTermination termination = DcaTermination::kOuterIterationCap;
  int64_t stall_events = 0;

  bool converged() const { return termination == DcaTermination::kConverged; }
  int64_t lmo_calls() const {
    return iterations.empty() ? 0 : iterations.back().lmo_calls_cum;
  }
  double final_objective() const {
    return iterations.empty() ? initial_objective : iterations.back().objective;
  }
};

struct DcaResult {
  Vector x;
  RunRecord record;
};

// Adaptive DCA with a Frank-Wolfe subsolver. x0 must be feasible for the
// problem's region. Terminates when the certified upper bound on the DC gap
// drops below config.dca_gap_tolerance, at the outer cap, at the time limit,
// or when a cold-started subsolve cannot improve on x_t.
DcaResult dca_solve(const DcProblem& problem, const Vector& x0,
                    const DcaConfig& config);

}  // namespace dcfw
