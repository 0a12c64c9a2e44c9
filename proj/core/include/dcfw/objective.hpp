#pragma once

#include <functional>

#include "dcfw/common.hpp"

namespace dcfw {

// Value and gradient oracles of a smooth convex function.
struct SmoothObjective {
  std::function<double(const Vector&)> value;
  std::function<Vector(const Vector&)> gradient;
};

}  // namespace dcfw
