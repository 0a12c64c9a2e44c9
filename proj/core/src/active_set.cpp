#include "dcfw/active_set.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dcfw {
namespace {

constexpr double kRenormalizeThreshold = 1e-12;

}  // namespace

ActiveSet::ActiveSet(Vector vertex) {
  iterate_ = vertex;
  atoms_.push_back({std::move(vertex), 1.0});
}

ActiveSet ActiveSet::from_atoms(std::vector<Atom> atoms) {
  if (atoms.empty()) throw ContractViolation("active set needs >= 1 atom");
  ActiveSet set;
  const Index dim = atoms.front().vertex.size();
  double total = 0.0;
  for (const Atom& atom : atoms) {
    if (atom.vertex.size() != dim) {
      throw ContractViolation("active set atoms have mismatched dimensions");
    }
    if (!(atom.weight >= 0.0) || !std::isfinite(atom.weight)) {
      throw ContractViolation("active set weights must be finite and >= 0");
    }
    total += atom.weight;
  }
  if (!(total > 0.0)) throw ContractViolation("active set weights sum to 0");
  set.iterate_ = Vector::Zero(dim);
  for (Atom& atom : atoms) {
    if (atom.weight > 0.0) set.merge(atom.vertex, atom.weight / total);
  }
  set.cleanup();
  return set;
}

std::ptrdiff_t ActiveSet::find(const Vector& vertex) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].vertex == vertex) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

void ActiveSet::merge(const Vector& vertex, double weight) {
  const std::ptrdiff_t at = find(vertex);
  if (at >= 0) {
    atoms_[static_cast<std::size_t>(at)].weight += weight;
  } else {
    atoms_.push_back({vertex, weight});
  }
}

void ActiveSet::frank_wolfe_update(const Vector& vertex, double gamma) {
  if (vertex.size() != dimension()) {
    throw ContractViolation("vertex dimension does not match active set");
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw InternalError("Frank-Wolfe step size outside [0, 1]: " +
                        std::to_string(gamma));
  }
  if (gamma == 0.0) return;
  if (gamma == 1.0) {
    atoms_.clear();
    atoms_.push_back({vertex, 1.0});
    iterate_ = vertex;
    return;
  }
  for (Atom& atom : atoms_) atom.weight *= (1.0 - gamma);
  merge(vertex, gamma);
  cleanup();
}

bool ActiveSet::pairwise_update(std::size_t from, std::size_t to,
                                double gamma) {
  if (from >= atoms_.size() || to >= atoms_.size() || from == to) {
    throw ContractViolation("invalid pairwise atom indices");
  }
  const double available = atoms_[from].weight;
  if (!(gamma >= 0.0 && gamma <= available)) {
    throw InternalError("pairwise step size outside [0, weight(from)]");
  }
  const bool drop = gamma == available;
  atoms_[to].weight += gamma;
  if (drop) {
    atoms_.erase(atoms_.begin() + static_cast<std::ptrdiff_t>(from));
  } else {
    atoms_[from].weight -= gamma;
  }
  cleanup();
  return drop;
}

void ActiveSet::blend(const ActiveSet& other, double gamma) {
  if (other.dimension() != dimension()) {
    throw ContractViolation("cannot blend active sets of different dimension");
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw ContractViolation("blend weight must lie in [0, 1]");
  }
  if (gamma == 0.0) return;
  if (gamma == 1.0) {
    *this = other;
    return;
  }
  for (Atom& atom : atoms_) atom.weight *= (1.0 - gamma);
  for (const Atom& atom : other.atoms_) merge(atom.vertex, gamma * atom.weight);
  cleanup();
}

void ActiveSet::cleanup() {
  std::erase_if(atoms_, [](const Atom& atom) { return !(atom.weight > 0.0); });
  if (atoms_.empty()) throw InternalError("active set lost all atoms");
  double total = 0.0;
  for (const Atom& atom : atoms_) total += atom.weight;
  if (std::abs(total - 1.0) > kRenormalizeThreshold) {
    for (Atom& atom : atoms_) atom.weight /= total;
  }
  iterate_.setZero(atoms_.front().vertex.size());
  for (const Atom& atom : atoms_) iterate_.noalias() += atom.weight * atom.vertex;
}

double ActiveSet::weight_sum_error() const {
  double total = 0.0;
  for (const Atom& atom : atoms_) total += atom.weight;
  return std::abs(total - 1.0);
}

double ActiveSet::iterate_error() const {
  Vector recombined = Vector::Zero(iterate_.size());
  for (const Atom& atom : atoms_) recombined += atom.weight * atom.vertex;
  return (recombined - iterate_).lpNorm<Eigen::Infinity>();
}

}  // namespace dcfw
