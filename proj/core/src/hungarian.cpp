#include "dcfw/hungarian.hpp"

#include <algorithm>
#include <limits>

namespace dcfw {

std::vector<Index> solve_assignment(const Matrix& cost) {
  if (cost.rows() != cost.cols()) {
    throw ContractViolation("assignment cost matrix must be square, got " +
                            std::to_string(cost.rows()) + "x" +
                            std::to_string(cost.cols()));
  }
  if (!cost.allFinite()) {
    throw ContractViolation("assignment cost matrix has non-finite entries");
  }
  const Index n = cost.rows();
  if (n == 0) return {};

  constexpr double kInf = std::numeric_limits<double>::infinity();
  // 1-based potentials; column 0 is the virtual source of each augmentation.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<Index> match(n + 1, 0), way(n + 1, 0);
  std::vector<double> min_slack(n + 1);
  std::vector<char> used(n + 1);

  for (Index row = 1; row <= n; ++row) {
    match[0] = row;
    Index col0 = 0;
    std::fill(min_slack.begin(), min_slack.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[col0] = 1;
      const Index row0 = match[col0];
      double delta = kInf;
      Index col1 = 0;
      for (Index col = 1; col <= n; ++col) {
        if (used[col]) continue;
        const double reduced = cost(row0 - 1, col - 1) - u[row0] - v[col];
        if (reduced < min_slack[col]) {
          min_slack[col] = reduced;
          way[col] = col0;
        }
        if (min_slack[col] < delta) {
          delta = min_slack[col];
          col1 = col;
        }
      }
      for (Index col = 0; col <= n; ++col) {
        if (used[col]) {
          u[match[col]] += delta;
          v[col] -= delta;
        } else {
          min_slack[col] -= delta;
        }
      }
      col0 = col1;
    } while (match[col0] != 0);
    // Flip the augmenting path.
    do {
      const Index col1 = way[col0];
      match[col0] = match[col1];
      col0 = col1;
    } while (col0 != 0);
  }

  std::vector<Index> assignment(n, -1);
  for (Index col = 1; col <= n; ++col) assignment[match[col] - 1] = col - 1;
  return assignment;
}

double assignment_cost(const Matrix& cost,
                       const std::vector<Index>& assignment) {
  double total = 0.0;
  for (Index row = 0; row < static_cast<Index>(assignment.size()); ++row) {
    total += cost(row, assignment[row]);
  }
  return total;
}

}  // namespace dcfw
