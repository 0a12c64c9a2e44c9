#include "dcfw/stop_rule.hpp"

#include <cmath>
#include <string>

#include "dcfw/common.hpp"

namespace dcfw {

StopRule StopRule::fixed(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ConfigError("fixed-epsilon stop rule needs epsilon > 0, got " +
                      std::to_string(epsilon));
  }
  return StopRule(FixedEpsilon{epsilon});
}

StopRule StopRule::adaptive(double phi_at_anchor) {
  if (!std::isfinite(phi_at_anchor)) {
    throw ConfigError("adaptive stop rule needs a finite anchor objective");
  }
  return StopRule(AdaptiveBound{phi_at_anchor});
}

double StopRule::threshold(double h_value) const {
  if (const auto* fixed_rule = std::get_if<FixedEpsilon>(&rule_)) {
    return fixed_rule->epsilon;
  }
  return std::get<AdaptiveBound>(rule_).phi_at_anchor - h_value;
}

}  // namespace dcfw
