#pragma once

#include <vector>

#include "dcfw/common.hpp"

namespace dcfw {

// Solves the square linear assignment problem min_p sum_i cost(i, p[i]) with
// a shortest-augmenting-path (Jonker-Volgenant style) Hungarian method in
// O(n^3). Returns p with p[row] = assigned column. Rows and columns are
// scanned in index order, so equal inputs give equal outputs.
//
// Throws ContractViolation for a non-square or non-finite cost matrix.
std::vector<Index> solve_assignment(const Matrix& cost);

// Sum of cost(i, assignment[i]) accumulated in row order.
double assignment_cost(const Matrix& cost, const std::vector<Index>& assignment);

}  // namespace dcfw
