#include "dcfw/line_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <spdlog/spdlog.h>

#include "overloaded.hpp"

namespace dcfw {
namespace {

using detail::Overloaded;

constexpr double kEps = std::numeric_limits<double>::epsilon();

LineSearchResult grid_fallback(const SmoothObjective& h, const Vector& x,
                               const Vector& d, double gamma_max,
                               LineSearchResult partial) {
  int value_evals = 0;
  auto phi = [&](double gamma) {
    ++value_evals;
    return h.value(x + gamma * d);
  };
  partial.gamma = grid_two_level_minimize(phi, 0.0, gamma_max);
  partial.value_evaluations += value_evals;
  partial.used_fallback = true;
  return partial;
}

}  // namespace

double grid_two_level_minimize(const std::function<double(double)>& phi,
                               double lo, double hi, int points,
                               bool prefer_high) {
  if (points < 2) throw ConfigError("grid search needs at least 2 points");
  if (!(hi >= lo)) throw ContractViolation("grid search interval is empty");

  auto at = [&](double a, double b, int i) {
    return i == points - 1 ? b
                           : a + (b - a) * static_cast<double>(i) / (points - 1);
  };
  struct Best {
    double arg;
    double value;
  };
  auto better = [&](const Best& candidate, const Best& incumbent) {
    if (prefer_high) {
      return candidate.value < incumbent.value ||
             (candidate.value == incumbent.value && candidate.arg > incumbent.arg);
    }
    return candidate.value < incumbent.value ||
           (candidate.value == incumbent.value && candidate.arg < incumbent.arg);
  };
  auto scan = [&](double a, double b, Best& best, int& best_index) {
    for (int i = 0; i < points; ++i) {
      const double gamma = at(a, b, i);
      const double value = phi(gamma);
      if (!std::isfinite(value)) continue;
      const Best candidate{gamma, value};
      if (best_index < 0 || better(candidate, best)) {
        best = candidate;
        best_index = i;
      }
    }
  };

  Best best{prefer_high ? hi : lo, std::numeric_limits<double>::infinity()};
  int coarse = -1;
  scan(lo, hi, best, coarse);
  if (coarse < 0) return best.arg;
  // The refined level keeps the coarse winner unless it finds a better point.
  const double lo2 = at(lo, hi, std::max(coarse - 1, 0));
  const double hi2 = at(lo, hi, std::min(coarse + 1, points - 1));
  int fine = 0;
  scan(lo2, hi2, best, fine);
  return best.arg;
}

LineSearchResult secant_line_search(const SmoothObjective& h, const Vector& x,
                                    const Vector& d, double gamma_max,
                                    const SecantSearch& params,
                                    std::optional<double> value_at_x) {
  if (!(gamma_max > 0.0)) {
    throw ContractViolation("secant line search needs gamma_max > 0");
  }
  const double d_norm = d.norm();
  if (!(d_norm > 0.0)) {
    throw ContractViolation("secant line search needs a nonzero direction");
  }
  if (!(params.tolerance > 0.0) || params.max_evaluations < 2) {
    throw ConfigError("secant line search needs tolerance > 0 and >= 2 "
                      "derivative evaluations");
  }

  LineSearchResult result;
  auto slope = [&](double gamma) {
    ++result.derivative_evaluations;
    return h.gradient(x + gamma * d).dot(d);
  };
  auto value = [&](double gamma) {
    ++result.value_evaluations;
    return h.value(x + gamma * d);
  };
  auto fallback = [&](const char* why) {
    spdlog::warn("secant line search: {}; falling back to grid search", why);
    return grid_fallback(h, x, d, gamma_max, result);
  };

  const double slope_lo = slope(0.0);
  if (!std::isfinite(slope_lo)) return fallback("non-finite derivative at 0");
  if (slope_lo >= 0.0) {
    result.gamma = 0.0;
    return result;
  }
  const double slope_hi = slope(gamma_max);
  if (!std::isfinite(slope_hi)) {
    return fallback("non-finite derivative at gamma_max");
  }
  if (slope_hi <= 0.0) {
    result.gamma = gamma_max;
    return result;
  }

  double a = 0.0, b = gamma_max;
  double slope_a = slope_lo, slope_b = slope_hi;
  double gamma = a - slope_a * (b - a) / (slope_b - slope_a);

  const double phi_0 = value_at_x ? *value_at_x : value(0.0);
  const double phi_max = value(gamma_max);
  const double trapezoid = gamma_max * 0.5 * (slope_lo + slope_hi);
  const double slack = 1e-9 * gamma_max * (std::abs(slope_lo) + std::abs(slope_hi)) +
                       64.0 * kEps * (std::abs(phi_0) + std::abs(phi_max));
  if (std::isfinite(phi_max) && std::abs(phi_max - phi_0 - trapezoid) <= slack) {
    // phi' is affine on [0, gamma_max]; the secant root is the minimizer.
    result.gamma = std::clamp(gamma, 0.0, gamma_max);
    return result;
  }

  int side = 0;
  while (result.derivative_evaluations < params.max_evaluations) {
    const double slope_mid = slope(gamma);
    if (!std::isfinite(slope_mid)) return fallback("non-finite derivative");
    if (std::abs(slope_mid) <= params.tolerance * d_norm) break;
    if (slope_mid < 0.0) {
      a = gamma;
      slope_a = slope_mid;
      if (side == -1) slope_b *= 0.5;
      side = -1;
    } else {
      b = gamma;
      slope_b = slope_mid;
      if (side == 1) slope_a *= 0.5;
      side = 1;
    }
    if (b - a <= kEps * gamma_max) break;
    gamma = a - slope_a * (b - a) / (slope_b - slope_a);
  }
  gamma = std::clamp(gamma, 0.0, gamma_max);
  if (!(value(gamma) <= phi_0)) return fallback("secant step did not descend");
  result.gamma = gamma;
  return result;
}

LineSearchResult line_search_step(const LineSearch& strategy,
                                  const SmoothObjective& h, const Vector& x,
                                  const Vector& d, double gamma_max,
                                  long long iteration,
                                  std::optional<double> value_at_x) {
  return std::visit(
      Overloaded{
          [&](const AgnosticStep&) {
            LineSearchResult result;
            result.gamma = std::min(
                2.0 / (static_cast<double>(iteration) + 2.0), gamma_max);
            return result;
          },
          [&](const SecantSearch& params) {
            return secant_line_search(h, x, d, gamma_max, params, value_at_x);
          },
          [&](const GridTwoLevelSearch& params) {
            LineSearchResult result;
            auto phi = [&](double gamma) {
              ++result.value_evaluations;
              return h.value(x + gamma * d);
            };
            result.gamma =
                grid_two_level_minimize(phi, 0.0, gamma_max, params.points);
            return result;
          },
      },
      strategy);
}

}  // namespace dcfw
