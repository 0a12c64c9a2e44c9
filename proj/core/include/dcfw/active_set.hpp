#pragma once

#include <cstddef>
#include <vector>

#include "dcfw/common.hpp"

namespace dcfw {

// A convex combination of vertices, together with the cached iterate it
// represents. Invariants after every public mutation:
//   - every weight is strictly positive (zero-weight atoms are removed),
//   - weights sum to 1 (renormalized when the drift exceeds 1e-12),
//   - vertices are pairwise distinct under exact coordinate equality,
//   - iterate() equals the recomputed combination.
class ActiveSet {
 public:
  struct Atom {
    Vector vertex;
    double weight;
  };

  // Singleton set {(vertex, 1)}.
  explicit ActiveSet(Vector vertex);

  // Builds a set from explicit atoms; duplicates are merged and weights must
  // be nonnegative with a positive sum (they are normalized).
  static ActiveSet from_atoms(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  const Vector& iterate() const { return iterate_; }
  Index dimension() const { return iterate_.size(); }

  // Index of an atom whose vertex equals `vertex` exactly, or -1.
  std::ptrdiff_t find(const Vector& vertex) const;

  // x <- (1 - gamma) x + gamma v. Existing weights scale by (1 - gamma) and
  // v is merged with weight gamma; gamma == 1 collapses the set to {v}.
  void frank_wolfe_update(const Vector& vertex, double gamma);

  // Moves weight gamma from atom `from` to atom `to`. gamma equal to the
  // weight of `from` drops that atom. Returns true on a drop.
  bool pairwise_update(std::size_t from, std::size_t to, double gamma);

  // (1 - gamma) * this + gamma * other, merging shared vertices.
  void blend(const ActiveSet& other, double gamma);

  // Max deviation of the invariants, for tests and debug checks.
  double weight_sum_error() const;
  double iterate_error() const;

 private:
  ActiveSet() = default;
  void merge(const Vector& vertex, double weight);
  void cleanup();

  std::vector<Atom> atoms_;
  Vector iterate_;
};

}  // namespace dcfw
