#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "dcfw/common.hpp"

namespace dcfw {

// Feasible regions with exact vertex oracles.
struct ProbabilitySimplex {
  Index n;
};

struct L1Ball {
  Index n;
  double radius = 1.0;
};

// B_1(k * tau) intersected with B_inf(tau).
struct KSparsePolytope {
  Index n;
  double tau;
  Index k;
};

// Doubly stochastic n x n matrices; vectors are the row-major flattening
// x[i * n + j] = X(i, j).
struct Birkhoff {
  Index n;
};

using Region = std::variant<ProbabilitySimplex, L1Ball, KSparsePolytope, Birkhoff>;

// Ambient dimension of the (flattened) region.
Index region_dimension(const Region& region);
std::string region_name(const Region& region);

// Throws ConfigError when the region parameters are invalid (k > n, etc).
void validate_region(const Region& region);

// Componentwise feasibility test with absolute slack `tol`. Used for contract
// checks on user-supplied starting points.
bool region_contains(const Region& region, const Vector& x, double tol = 1e-9);

// A deterministic feasible starting point: the simplex barycenter, the origin
// for the norm balls, and the uniform 1/n matrix for Birkhoff.
Vector initial_point(const Region& region);

// Vertex rules. Ties are broken towards the lowest index and sign(0) = +1.
Vector simplex_lmo(const Vector& c);
Vector l1ball_lmo(const Vector& c, double radius);
Vector ksparse_lmo(const Vector& c, double tau, Index k);
// Returns the permutation matrix minimizing <C, X>.
Matrix birkhoff_lmo(const Matrix& c);

// Flattening helpers for Birkhoff vectors.
Matrix unflatten(const Vector& x, Index n);
Vector flatten(const Matrix& x);

// A region together with an invocation counter. One instance belongs to one
// solve at a time.
class LinearMinimizationOracle {
 public:
  explicit LinearMinimizationOracle(Region region);

  // Returns argmin_{v in region} <c, v>; increments the call counter.
  Vector operator()(const Vector& c);

  const Region& region() const { return region_; }
  Index dimension() const { return dimension_; }
  int64_t calls() const { return calls_; }
  void reset_calls() { calls_ = 0; }

 private:
  Region region_;
  Index dimension_;
  int64_t calls_ = 0;
};

}  // namespace dcfw
