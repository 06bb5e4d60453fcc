#pragma once

// Exact two-phase primal simplex over the rationals, Bland's rule.

#include "latgap/error.hpp"
#include "latgap/scalar.hpp"

#include <vector>

namespace latgap {

struct LpSolution {
  std::vector<Index> basis;  // sorted basic column indices
  RatVector x;
  Rational value;
  RatVector reducedCosts;    // one per column, zero on the basis
};

/// min { c.x : A x = b, x >= 0 } for A with full row rank.
///
/// Throws LpInfeasible, LpUnbounded, or RankDeficient if the artificial
/// variables cannot be driven out of the final phase-one basis.
LpSolution solveStandardForm(const RatMatrix& a, const RatVector& b, const RatVector& c);

/// Solves M X = R exactly; throws SingularBasis when M is singular.
RatMatrix solveExact(const RatMatrix& m, const RatMatrix& rhs);

}  // namespace latgap
