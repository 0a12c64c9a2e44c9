#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Core>

namespace dcfw {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using RowMajorMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Index = Eigen::Index;

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition was violated by the caller.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Invalid or inconsistent configuration values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A function/gradient oracle produced a non-finite result.
class OracleFailure : public Error {
 public:
  OracleFailure(std::string oracle, const std::string& what)
      : Error(oracle + ": " + what), oracle_(std::move(oracle)) {}
  const std::string& oracle() const { return oracle_; }

 private:
  std::string oracle_;
};

// Broken internal invariant (a bug, not bad input).
class InternalError : public Error {
 public:
  using Error::Error;
};

// Filesystem or stream failure.
class IoError : public Error {
 public:
  using Error::Error;
};

// Failure inside a subsolver, tagged with the outer DCA iteration.
class SubsolverFailure : public Error {
 public:
  SubsolverFailure(int64_t outer_iteration, const std::string& what)
      : Error("outer iteration " + std::to_string(outer_iteration) + ": " +
              what),
        outer_iteration_(outer_iteration) {}
  int64_t outer_iteration() const { return outer_iteration_; }

 private:
  int64_t outer_iteration_;
};

}  // namespace dcfw
