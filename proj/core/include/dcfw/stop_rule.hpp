#pragma once

#include <variant>

namespace dcfw {

// Stop once the Frank-Wolfe gap drops below a fixed epsilon.
struct FixedEpsilon {
  double epsilon;
};

// Stop once the Frank-Wolfe gap at y drops below phi(x_t) - h_t(y), the
// progress already realized on the subproblem anchored at x_t.
struct AdaptiveBound {
  double phi_at_anchor;
};

class StopRule {
 public:
  // Throws ConfigError unless epsilon > 0.
  static StopRule fixed(double epsilon);
  // phi_at_anchor is evaluated once per outer iteration by the caller.
  static StopRule adaptive(double phi_at_anchor);

  bool is_adaptive() const {
    return std::holds_alternative<AdaptiveBound>(rule_);
  }
  // Whether fires() needs the subproblem value at the current point.
  bool needs_value() const { return is_adaptive(); }

  // Right-hand side of the stopping test at a point with subproblem value
  // `h_value` (ignored for the fixed rule).
  double threshold(double h_value) const;
  bool fires(double fw_gap, double h_value) const {
    return fw_gap <= threshold(h_value);
  }

  const std::variant<FixedEpsilon, AdaptiveBound>& rule() const {
    return rule_;
  }

 private:
  explicit StopRule(std::variant<FixedEpsilon, AdaptiveBound> rule)
      : rule_(rule) {}
  std::variant<FixedEpsilon, AdaptiveBound> rule_;
};

}  // namespace dcfw
