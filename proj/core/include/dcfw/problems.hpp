#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "dcfw/common.hpp"
#include "dcfw/dca.hpp"

namespace dcfw {

// Standard normal draws from mt19937_64 via Box-Muller. Unlike
// std::normal_distribution the sequence is identical on every standard
// library, so (n, seed) pins an instance down everywhere.
class NormalSampler {
 public:
  explicit NormalSampler(uint64_t seed) : engine_(seed) {}

  double operator()();
  Vector vector(Index n);
  // Filled row by row.
  Matrix matrix(Index rows, Index cols);

 private:
  double uniform_open();  // (0, 1]

  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// phi(x) = (1/2 x'Ax + a'x + c) - (1/2 x'Bx + b'x + d) over the simplex.
struct QuadraticDcInstance {
  Index n = 0;
  uint64_t seed = 0;
  Matrix A, B;
  Vector a, b;
  double c = 0.0;
  double d = 0.0;

  // Largest eigenvalue of A, the smoothness constant of every subproblem.
  double lipschitz() const;
};

// A = M'M + 0.1 I with a fresh standard normal M for A and for B; a, b, c, d
// standard normal. Draw order: M_A, M_B, a, b, c, d.
QuadraticDcInstance gen_quadratic_dc(Index n, uint64_t seed);

DcProblem make_problem(const QuadraticDcInstance& instance);

// f(x) = 1/2 x'Ax + a'x + (1/n) exp((1/n) c'x)
// g(x) = 1/2 x'Bx + b'x + 0.1 sum_i log(1 + exp(d_i x_i))
// over the k-sparse polytope with tau = 10, k = min(10, n).
struct HardDcInstance {
  Index n = 0;
  uint64_t seed = 0;
  Matrix A, B;
  Vector a, b;
  Vector c, d;
  double tau = 10.0;
  Index k = 10;
};

// Same draws as gen_quadratic_dc except that c and d are vectors.
HardDcInstance gen_hard_dc(Index n, uint64_t seed);

DcProblem make_problem(const HardDcInstance& instance);

// Flow matrix A and distance matrix B of a quadratic assignment problem.
struct QapInstance {
  std::string name;
  Index n = 0;
  Matrix A, B;
};

// Throws ContractViolation unless A and B are finite n x n matrices.
void validate(const QapInstance& instance);

// f(X) = 1/4 |A'X + XB|^2 and g(X) = 1/4 |A'X - XB|^2 over Birkhoff(n), with
// X flattened row-major. f - g = <A'X, XB>.
DcProblem qap_dc_oracles(const QapInstance& instance);

// <A'X, XB>.
double qap_objective(const QapInstance& instance, const Matrix& X);

// Numerically safe log(1 + exp(z)) and 1 / (1 + exp(-z)).
double softplus(double z);
double logistic(double z);

}  // namespace dcfw
