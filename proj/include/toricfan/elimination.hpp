#pragma once

// Exact Fourier-Motzkin elimination for systems of non-strict inequalities
//   a . x >= b,   x in Q^n.
// Redundant combinations are pruned with Chernikov's history criterion, so the
// small systems used here (open-orthant and separation tests) stay small.

#include <optional>
#include <vector>

#include "toricfan/exact.hpp"

namespace toricfan {

struct Inequality {
  std::vector<Rational> coefficients;
  Rational rhs;
};

class InequalitySystem {
 public:
  explicit InequalitySystem(std::size_t variables) : variables_(variables) {}

  std::size_t variables() const noexcept { return variables_; }
  const std::vector<Inequality>& rows() const noexcept { return rows_; }

  /// Adds a . x >= b.
  void add_at_least(std::vector<Rational> a, Rational b);
  /// Adds x_i >= 0.
  void add_nonnegative(std::size_t i);

  bool satisfied_by(const RatVector& x) const;

 private:
  std::size_t variables_;
  std::vector<Inequality> rows_;
};

/// Returns a point satisfying every inequality, or nullopt if none exists.
/// The point is reconstructed by back substitution and re-checked against
/// the original system before it is returned.
std::optional<RatVector> find_feasible_point(const InequalitySystem& system);

inline bool is_feasible(const InequalitySystem& system) {
  return find_feasible_point(system).has_value();
}

}  // namespace toricfan
