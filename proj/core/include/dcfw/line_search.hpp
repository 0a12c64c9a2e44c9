#pragma once

#include <functional>
#include <optional>
#include <variant>

#include "dcfw/common.hpp"
#include "dcfw/objective.hpp"

namespace dcfw {

// Open-loop 2 / (k + 2) step; capped at the maximal step for pairwise moves.
struct AgnosticStep {};

// Secant iteration on phi'(gamma) = <grad h(x + gamma d), d>.
struct SecantSearch {
  double tolerance = 1e-10;
  int max_evaluations = 40;
};

// Coarse grid over [0, gamma_max] followed by a refined grid spanning the
// neighbors of the coarse argmin.
struct GridTwoLevelSearch {
  int points = 11;
};

using LineSearch = std::variant<AgnosticStep, SecantSearch, GridTwoLevelSearch>;

struct LineSearchResult {
  double gamma = 0.0;
  int derivative_evaluations = 0;
  int value_evaluations = 0;
  // Set when the secant iteration hit a non-finite derivative or failed to
  // decrease h and the grid search was used instead.
  bool used_fallback = false;
};

// Approximately minimizes phi(gamma) = h(x + gamma d) over [0, gamma_max].
//
// The derivative is sampled at both interval ends first. A nonnegative slope
// at 0 returns 0, a nonpositive slope at gamma_max returns gamma_max, and
// otherwise the secant root of the two samples is taken. If h is quadratic
// along the segment (checked with the trapezoid identity on the two end
// values, which costs value evaluations but no extra derivative) that root is
// exact and returned after two derivative evaluations. Otherwise an
// Illinois-safeguarded secant iteration continues until
// |phi'| <= tolerance * ||d|| or max_evaluations derivatives were used.
//
// `value_at_x` may carry h(x) when the caller already knows it.
LineSearchResult secant_line_search(const SmoothObjective& h, const Vector& x,
                                    const Vector& d, double gamma_max,
                                    const SecantSearch& params = {},
                                    std::optional<double> value_at_x = {});

// Two-level grid minimization of a scalar function on [lo, hi]. Each level
// uses `points` equispaced samples; level two spans the two level-one
// neighbors of the argmin. Ties go to the larger argument when prefer_high,
// else to the smaller one.
double grid_two_level_minimize(const std::function<double(double)>& phi,
                               double lo, double hi, int points = 11,
                               bool prefer_high = false);

// Dispatches a LineSearch strategy for one step along d with maximal step
// gamma_max; `iteration` feeds the agnostic rule.
LineSearchResult line_search_step(const LineSearch& strategy,
                                  const SmoothObjective& h, const Vector& x,
                                  const Vector& d, double gamma_max,
                                  long long iteration,
                                  std::optional<double> value_at_x = {});

}  // namespace dcfw
