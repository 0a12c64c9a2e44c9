#include "dcfw/problems.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

namespace dcfw {
namespace {

Matrix shifted_gram(NormalSampler& normal, Index n) {
  const Matrix m = normal.matrix(n, n);
  Matrix gram = m.transpose() * m;
  gram.diagonal().array() += 0.1;
  // Symmetric to the last bit; the product alone is only symmetric to roundoff.
  return 0.5 * (gram + gram.transpose());
}

void require_size(Index n) {
  if (n < 1) throw ConfigError("instance size must be >= 1");
}

void check_dimension(const Vector& x, Index n) {
  if (x.size() != n) {
    throw ContractViolation("expected a point of size " + std::to_string(n) +
                            ", got " + std::to_string(x.size()));
  }
}

}  // namespace

double NormalSampler::uniform_open() {
  return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double NormalSampler::operator()() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double radius = std::sqrt(-2.0 * std::log(uniform_open()));
  const double angle = 2.0 * std::numbers::pi * uniform_open();
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Vector NormalSampler::vector(Index n) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) v[i] = (*this)();
  return v;
}

Matrix NormalSampler::matrix(Index rows, Index cols) {
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = (*this)();
  }
  return m;
}

double softplus(double z) {
  return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

double logistic(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double QuadraticDcInstance::lipschitz() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(A, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

QuadraticDcInstance gen_quadratic_dc(Index n, uint64_t seed) {
  require_size(n);
  NormalSampler normal(seed);
  QuadraticDcInstance inst;
  inst.n = n;
  inst.seed = seed;
  inst.A = shifted_gram(normal, n);
  inst.B = shifted_gram(normal, n);
  inst.a = normal.vector(n);
  inst.b = normal.vector(n);
  inst.c = normal();
  inst.d = normal();
  return inst;
}

DcProblem make_problem(const QuadraticDcInstance& instance) {
  auto p = std::make_shared<const QuadraticDcInstance>(instance);
  const Index n = p->n;
  DcProblem problem;
  problem.dimension = n;
  problem.lmo = std::make_shared<LinearMinimizationOracle>(ProbabilitySimplex{n});
  problem.f_value = [p](const Vector& x) {
    check_dimension(x, p->n);
    return 0.5 * x.dot(p->A * x) + p->a.dot(x) + p->c;
  };
  problem.f_grad = [p](const Vector& x) -> Vector {
    check_dimension(x, p->n);
    return p->A * x + p->a;
  };
  problem.g_value = [p](const Vector& x) {
    check_dimension(x, p->n);
    return 0.5 * x.dot(p->B * x) + p->b.dot(x) + p->d;
  };
  problem.g_subgrad = [p](const Vector& x) -> Vector {
    check_dimension(x, p->n);
    return p->B * x + p->b;
  };
  return problem;
}

HardDcInstance gen_hard_dc(Index n, uint64_t seed) {
  require_size(n);
  NormalSampler normal(seed);
  HardDcInstance inst;
  inst.n = n;
  inst.seed = seed;
  inst.A = shifted_gram(normal, n);
  inst.B = shifted_gram(normal, n);
  inst.a = normal.vector(n);
  inst.b = normal.vector(n);
  inst.c = normal.vector(n);
  inst.d = normal.vector(n);
  inst.tau = 10.0;
  inst.k = std::min<Index>(10, n);
  return inst;
}

DcProblem make_problem(const HardDcInstance& instance) {
  auto p = std::make_shared<const HardDcInstance>(instance);
  const Index n = p->n;
  const double inv_n = 1.0 / static_cast<double>(n);
  const double log_n = std::log(static_cast<double>(n));
  DcProblem problem;
  problem.dimension = n;
  problem.lmo = std::make_shared<LinearMinimizationOracle>(
      KSparsePolytope{n, p->tau, p->k});
  // (1/n) exp(s/n) evaluated as exp(s/n - log n).
  auto exp_term = [p, inv_n, log_n](const Vector& x) {
    return std::exp(p->c.dot(x) * inv_n - log_n);
  };
  problem.f_value = [p, exp_term](const Vector& x) {
    check_dimension(x, p->n);
    return 0.5 * x.dot(p->A * x) + p->a.dot(x) + exp_term(x);
  };
  problem.f_grad = [p, exp_term, inv_n](const Vector& x) -> Vector {
    check_dimension(x, p->n);
    return p->A * x + p->a + (exp_term(x) * inv_n) * p->c;
  };
  problem.g_value = [p](const Vector& x) {
    check_dimension(x, p->n);
    double soft = 0.0;
    for (Index i = 0; i < x.size(); ++i) soft += softplus(p->d[i] * x[i]);
    return 0.5 * x.dot(p->B * x) + p->b.dot(x) + 0.1 * soft;
  };
  problem.g_subgrad = [p](const Vector& x) -> Vector {
    check_dimension(x, p->n);
    Vector grad = p->B * x + p->b;
    for (Index i = 0; i < x.size(); ++i) {
      grad[i] += 0.1 * p->d[i] * logistic(p->d[i] * x[i]);
    }
    return grad;
  };
  return problem;
}

void validate(const QapInstance& instance) {
  const Index n = instance.n;
  if (n < 1) throw ContractViolation("QAP size must be >= 1");
  if (instance.A.rows() != n || instance.A.cols() != n ||
      instance.B.rows() != n || instance.B.cols() != n) {
    throw ContractViolation("QAP matrices must both be " + std::to_string(n) +
                            "x" + std::to_string(n));
  }
  if (!instance.A.allFinite() || !instance.B.allFinite()) {
    throw ContractViolation("QAP matrices must be finite");
  }
}

DcProblem qap_dc_oracles(const QapInstance& instance) {
  validate(instance);
  auto p = std::make_shared<const QapInstance>(instance);
  const Index n = p->n;
  DcProblem problem;
  problem.dimension = n * n;
  problem.lmo = std::make_shared<LinearMinimizationOracle>(Birkhoff{n});
  // Y = A'X + XB and Z = A'X - XB.
  auto split = [p](const Vector& x) {
    const Matrix X = unflatten(x, p->n);
    const Matrix left = p->A.transpose() * X;
    const Matrix right = X * p->B;
    return std::pair<Matrix, Matrix>(left + right, left - right);
  };
  problem.f_value = [split](const Vector& x) {
    return 0.25 * split(x).first.squaredNorm();
  };
  problem.f_grad = [p, split](const Vector& x) {
    const Matrix Y = split(x).first;
    return flatten(0.5 * (p->A * Y + Y * p->B.transpose()));
  };
  problem.g_value = [split](const Vector& x) {
    return 0.25 * split(x).second.squaredNorm();
  };
  problem.g_subgrad = [p, split](const Vector& x) {
    const Matrix Z = split(x).second;
    return flatten(0.5 * (p->A * Z - Z * p->B.transpose()));
  };
  return problem;
}

double qap_objective(const QapInstance& instance, const Matrix& X) {
  validate(instance);
  if (X.rows() != instance.n || X.cols() != instance.n) {
    throw ContractViolation("QAP objective needs an n x n matrix");
  }
  return (instance.A.transpose() * X).cwiseProduct(X * instance.B).sum();
}

}  // namespace dcfw
