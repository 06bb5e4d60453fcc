#pragma once

// Gomory group relaxations of  IP_c(A, b) = min { c.x : A x = b, x in Z^n_{>=0} }.
//
// For an optimal LP basis tau the relaxation drops x_tau >= 0 and becomes
// the group problem
//   min { c'.x : x = u_nb (mod Lambda(A)), x >= 0 },
// with Lambda(A) the kernel lattice of A projected onto the nonbasic
// coordinates, c' = c_nb - c_tau A_tau^{-1} A_nb the reduced costs and u any
// integer solution of A u = b.  Its value plus c_tau A_tau^{-1} b bounds
// the IP from below.

#include "latgap/groupsolve.hpp"
#include "latgap/simplex.hpp"

#include <optional>
#include <vector>

namespace latgap {

/// True iff { x >= 0 : A x = 0 } = {0}, decided by the auxiliary LP
/// max sum(x) s.t. A x = 0, 0 <= x <= 1.  By Gordan's alternative this also
/// yields y with y A > 0, so cone(A) is pointed.
bool checkPointed(const IntMatrix& a);

class IpInstance {
 public:
  /// Throws DimensionMismatch, RankDeficient, or InvalidInput when the
  /// kernel of A meets the nonnegative orthant outside the origin.
  IpInstance(IntMatrix a, IntVector b, RatVector c);

  Index rows() const { return a_.rows(); }
  Index cols() const { return a_.cols(); }
  const IntMatrix& A() const { return a_; }
  const IntVector& b() const { return b_; }
  const RatVector& c() const { return c_; }

  IpInstance withRhs(IntVector b) const;

 private:
  IntMatrix a_;
  IntVector b_;
  RatVector c_;
};

struct LpBasisResult {
  std::vector<Index> basic;     // tau, sorted
  std::vector<Index> nonbasic;  // complement, sorted
  Rational value;
  RatVector x;
  RatVector reducedCosts;       // c' on the nonbasic columns, in order
  bool unique = false;          // every nonbasic reduced cost > 0
};

LpBasisResult lpSolve(const IpInstance& inst);

struct GroupRelaxation {
  LatticeBasis lattice;
  CostVector cost;
  IntVector residue;
  Rational constant;
  LpBasisResult lp;

  GroupInstance instance() const { return GroupInstance(lattice, cost); }
};

/// Throws NonGenericReducedCosts if some c'_j = 0 and NoIntegerSolution if
/// b is not in A Z^n.
GroupRelaxation buildRelaxation(const IpInstance& inst);

/// The relaxation induced by constraint row `row` of B^{-1} A x = B^{-1} b:
///   sum_j (D ahat_ij mod D) x_j = D bhat_i (mod D),  D = |det A_tau|.
GroupRelaxation singleRowRelaxation(const IpInstance& inst, Index row);

struct RelaxationSolution {
  Rational bound;       // m(Lambda, c', r) + constant
  Rational groupValue;  // m(Lambda, c', r)
  IntVector minimizer;  // nonbasic part
};

RelaxationSolution solveRelaxation(const GroupRelaxation& rel,
                                   const SolverOptions& options = {});

/// Right-hand side b' = A u with u_nonbasic = witness, u_tau = 0, for which
/// the IP optimum equals gap + c_tau A_tau^{-1} b'.  Knapsacks (one row)
/// only; throws InvalidInput otherwise.
struct WitnessRhs {
  IntVector u;
  IntVector bPrime;
  Rational predicted;
};

WitnessRhs witnessRhs(const IpInstance& inst, const GroupRelaxation& rel,
                      const GapCertificate& cert);

struct BruteForceOptions {
  std::uint64_t maxVisits = 200'000'000;
};

/// min c.x over integer x in [0, box]^n with A x = b; nullopt if none.
/// Throws ResourceLimitExceeded past maxVisits enumeration nodes.
std::optional<Rational> ipBruteForce(const IpInstance& inst, std::uint64_t box,
                                     const BruteForceOptions& options = {});

}  // namespace latgap
