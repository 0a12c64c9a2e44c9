#include "dcfw/lmo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "dcfw/hungarian.hpp"
#include "overloaded.hpp"

namespace dcfw {
namespace {

using detail::Overloaded;

double sign_or_one(double value) { return value < 0.0 ? -1.0 : 1.0; }

void require_finite(const Vector& c) {
  if (!c.allFinite()) {
    throw ContractViolation("linear objective has non-finite entries");
  }
}

}  // namespace

Index region_dimension(const Region& region) {
  return std::visit(Overloaded{
                        [](const ProbabilitySimplex& r) { return r.n; },
                        [](const L1Ball& r) { return r.n; },
                        [](const KSparsePolytope& r) { return r.n; },
                        [](const Birkhoff& r) { return r.n * r.n; },
                    },
                    region);
}

std::string region_name(const Region& region) {
  return std::visit(
      Overloaded{
          [](const ProbabilitySimplex& r) {
            return "simplex(" + std::to_string(r.n) + ")";
          },
          [](const L1Ball& r) {
            return "l1ball(" + std::to_string(r.n) + ")";
          },
          [](const KSparsePolytope& r) {
            return "ksparse(" + std::to_string(r.n) + ",k=" +
                   std::to_string(r.k) + ")";
          },
          [](const Birkhoff& r) {
            return "birkhoff(" + std::to_string(r.n) + ")";
          },
      },
      region);
}

void validate_region(const Region& region) {
  std::visit(
      Overloaded{
          [](const ProbabilitySimplex& r) {
            if (r.n < 1) throw ConfigError("simplex dimension must be >= 1");
          },
          [](const L1Ball& r) {
            if (r.n < 1) throw ConfigError("l1-ball dimension must be >= 1");
            if (!(r.radius >= 0.0)) {
              throw ConfigError("l1-ball radius must be >= 0");
            }
          },
          [](const KSparsePolytope& r) {
            if (r.n < 1) throw ConfigError("k-sparse dimension must be >= 1");
            if (!(r.tau > 0.0)) throw ConfigError("k-sparse tau must be > 0");
            if (r.k < 1 || r.k > r.n) {
              throw ConfigError("k-sparse k must lie in [1, n], got k=" +
                                std::to_string(r.k) +
                                ", n=" + std::to_string(r.n));
            }
          },
          [](const Birkhoff& r) {
            if (r.n < 1) throw ConfigError("Birkhoff size must be >= 1");
          },
      },
      region);
}

bool region_contains(const Region& region, const Vector& x, double tol) {
  if (x.size() != region_dimension(region) || !x.allFinite()) return false;
  return std::visit(
      Overloaded{
          [&](const ProbabilitySimplex&) {
            return x.minCoeff() >= -tol && std::abs(x.sum() - 1.0) <= tol;
          },
          [&](const L1Ball& r) {
            return x.lpNorm<1>() <= r.radius + tol;
          },
          [&](const KSparsePolytope& r) {
            return x.lpNorm<Eigen::Infinity>() <= r.tau + tol &&
                   x.lpNorm<1>() <= static_cast<double>(r.k) * r.tau + tol;
          },
          [&](const Birkhoff& r) {
            const Matrix m = unflatten(x, r.n);
            return m.minCoeff() >= -tol &&
                   ((m.rowwise().sum().array() - 1.0).abs() <= tol).all() &&
                   ((m.colwise().sum().array() - 1.0).abs() <= tol).all();
          },
      },
      region);
}

Vector initial_point(const Region& region) {
  return std::visit(
      Overloaded{
          [](const ProbabilitySimplex& r) -> Vector {
            return Vector::Constant(r.n, 1.0 / static_cast<double>(r.n));
          },
          [](const L1Ball& r) -> Vector { return Vector::Zero(r.n); },
          [](const KSparsePolytope& r) -> Vector { return Vector::Zero(r.n); },
          [](const Birkhoff& r) -> Vector {
            return Vector::Constant(r.n * r.n, 1.0 / static_cast<double>(r.n));
          },
      },
      region);
}

Vector simplex_lmo(const Vector& c) {
  require_finite(c);
  if (c.size() == 0) throw ContractViolation("simplex LMO on empty vector");
  Index best = 0;
  for (Index i = 1; i < c.size(); ++i) {
    if (c[i] < c[best]) best = i;
  }
  Vector v = Vector::Zero(c.size());
  v[best] = 1.0;
  return v;
}

Vector l1ball_lmo(const Vector& c, double radius) {
  require_finite(c);
  if (c.size() == 0) throw ContractViolation("l1-ball LMO on empty vector");
  Index best = 0;
  for (Index i = 1; i < c.size(); ++i) {
    if (std::abs(c[i]) > std::abs(c[best])) best = i;
  }
  Vector v = Vector::Zero(c.size());
  if (radius > 0.0) v[best] = -radius * sign_or_one(c[best]);
  return v;
}

Vector ksparse_lmo(const Vector& c, double tau, Index k) {
  require_finite(c);
  if (k < 1 || k > c.size()) {
    throw ConfigError("k-sparse LMO requires 1 <= k <= n, got k=" +
                      std::to_string(k) + ", n=" + std::to_string(c.size()));
  }
  std::vector<Index> order(static_cast<size_t>(c.size()));
  std::iota(order.begin(), order.end(), Index{0});
  std::partial_sort(order.begin(), order.begin() + k, order.end(),
                    [&c](Index a, Index b) {
                      const double abs_a = std::abs(c[a]);
                      const double abs_b = std::abs(c[b]);
                      return abs_a > abs_b || (abs_a == abs_b && a < b);
                    });
  Vector v = Vector::Zero(c.size());
  for (Index j = 0; j < k; ++j) {
    const Index i = order[static_cast<size_t>(j)];
    v[i] = -tau * sign_or_one(c[i]);
  }
  return v;
}

Matrix birkhoff_lmo(const Matrix& c) {
  const std::vector<Index> assignment = solve_assignment(c);
  Matrix x = Matrix::Zero(c.rows(), c.cols());
  for (Index row = 0; row < c.rows(); ++row) x(row, assignment[row]) = 1.0;
  return x;
}

Matrix unflatten(const Vector& x, Index n) {
  if (x.size() != n * n) {
    throw ContractViolation("cannot reshape vector of size " +
                            std::to_string(x.size()) + " to " +
                            std::to_string(n) + "x" + std::to_string(n));
  }
  return Eigen::Map<const RowMajorMatrix>(x.data(), n, n);
}

Vector flatten(const Matrix& x) {
  const RowMajorMatrix row_major = x;
  return Eigen::Map<const Vector>(row_major.data(), row_major.size());
}

LinearMinimizationOracle::LinearMinimizationOracle(Region region)
    : region_(std::move(region)) {
  validate_region(region_);
  dimension_ = region_dimension(region_);
}

Vector LinearMinimizationOracle::operator()(const Vector& c) {
  if (c.size() != dimension_) {
    throw ContractViolation("LMO expected direction of size " +
                            std::to_string(dimension_) + ", got " +
                            std::to_string(c.size()));
  }
  ++calls_;
  return std::visit(
      Overloaded{
          [&](const ProbabilitySimplex&) { return simplex_lmo(c); },
          [&](const L1Ball& r) { return l1ball_lmo(c, r.radius); },
          [&](const KSparsePolytope& r) { return ksparse_lmo(c, r.tau, r.k); },
          [&](const Birkhoff& r) {
            require_finite(c);
            return flatten(birkhoff_lmo(unflatten(c, r.n)));
          },
      },
      region_);
}

}  // namespace dcfw
