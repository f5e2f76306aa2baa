#pragma once

#include <cstddef>
#include <vector>

#include "qmp/exact.hpp"

namespace qmp {

/// a . x <= b, or a . x = b when equality is set.
struct LinearConstraint {
  QVector a;
  Rational b;
  bool equality = false;
};

enum class LpStatus { kOptimal, kUnbounded, kInfeasible };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  QVector x;
};

/// Exact maximization of c . x over free variables x (two-phase simplex,
/// Bland's rule, rational arithmetic).
LpResult maximize(const QVector& c, const std::vector<LinearConstraint>& constraints);

bool feasible(const std::vector<LinearConstraint>& constraints, std::size_t num_vars);

/// Indices (into `inequalities`) of a subset that implies the rest together
/// with the ambient system. Inequalities are tested in order and removed as soon
/// as the remaining ones imply them. Throws kInfeasible if the ambient system
/// has no solution.
std::vector<std::size_t> redundancy_filter(const std::vector<LinearConstraint>& inequalities,
                                           const std::vector<LinearConstraint>& ambient);

}  // namespace qmp
