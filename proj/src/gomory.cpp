#include "latgap/gomory.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace latgap {

namespace {

RatMatrix toRationalMatrix(const IntMatrix& m) { return m.cast<Rational>(); }

IntMatrix selectColumns(const IntMatrix& m, const std::vector<Index>& cols) {
  IntMatrix out(m.rows(), static_cast<Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Index>(j)) = m.col(cols[j]);
  return out;
}

template <typename Vec>
Vec selectEntries(const Vec& v, const std::vector<Index>& idx) {
  Vec out(static_cast<Index>(idx.size()));
  for (std::size_t j = 0; j < idx.size(); ++j) out(static_cast<Index>(j)) = v(idx[j]);
  return out;
}

// Data shared by the full and single-row relaxations.
struct BasisData {
  LpBasisResult lp;
  RatMatrix basisInverse;  // A_tau^{-1}
  RatVector costs;         // c' on the nonbasic columns
  Rational constant;       // c_tau A_tau^{-1} b
  IntVector residue;       // u_nonbasic, A u = b
};

BasisData basisData(const IpInstance& inst) {
  if (inst.cols() == inst.rows())
    throw Error(ErrorCode::InvalidInput, "no nonbasic variables: n equals d");
  BasisData out;
  out.lp = lpSolve(inst);
  const IntMatrix aTau = selectColumns(inst.A(), out.lp.basic);
  const IntMatrix aNb = selectColumns(inst.A(), out.lp.nonbasic);
  out.basisInverse = solveExact(toRationalMatrix(aTau),
                                RatMatrix::Identity(inst.rows(), inst.rows()));
  const RatVector cTau = selectEntries(inst.c(), out.lp.basic);
  const RatVector cNb = selectEntries(inst.c(), out.lp.nonbasic);
  const RatVector dual = out.basisInverse.transpose() * cTau;  // c_tau A_tau^{-1}
  out.costs = cNb - toRationalMatrix(aNb).transpose() * dual;
  for (Index j = 0; j < out.costs.size(); ++j)
    if (out.costs(j) == 0)
      throw Error(ErrorCode::NonGenericReducedCosts,
                  "reduced cost of column " + std::to_string(out.lp.nonbasic[j] + 1) +
                      " is zero");
  out.constant = dual.dot(toRational(inst.b()));
  const auto u = solveIntegerSystem(inst.A(), inst.b());
  if (!u) throw Error(ErrorCode::NoIntegerSolution, "A u = b has no integer solution");
  out.residue = selectEntries(*u, out.lp.nonbasic);
  return out;
}

// Lattice { x in Z^k : (x, t) in ker(row) for some t } for a row whose last
// entry is nonzero.
LatticeBasis projectedKernel(const IntMatrix& row) {
  const Index k = row.cols() - 1;
  return LatticeBasis(hnf(IntMatrix(kernelLattice(row).leftCols(k))));
}

// Representative of r + Lambda in prod [0, H_ii), H the Hermite form.
IntVector reduceResidue(const LatticeBasis& lattice, IntVector r) {
  const IntMatrix& h = lattice.rows();
  for (Index i = 0; i < h.rows(); ++i) {
    const Integer q = floorDiv(r(i), h(i, i));
    if (q != 0) r -= q * IntVector(h.row(i).transpose());
  }
  return r;
}

}  // namespace

bool checkPointed(const IntMatrix& a) {
  const Index d = a.rows();
  const Index n = a.cols();
  // [A 0; I I] [x; s] = [0; 1],  min -sum(x).
  RatMatrix m = RatMatrix::Zero(d + n, 2 * n);
  m.topLeftCorner(d, n) = toRationalMatrix(a);
  for (Index j = 0; j < n; ++j) {
    m(d + j, j) = 1;
    m(d + j, n + j) = 1;
  }
  RatVector rhs = RatVector::Zero(d + n);
  rhs.tail(n).setConstant(Rational(1));
  RatVector c = RatVector::Zero(2 * n);
  c.head(n).setConstant(Rational(-1));
  return solveStandardForm(m, rhs, c).value == 0;
}

IpInstance::IpInstance(IntMatrix a, IntVector b, RatVector c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.rows() == 0 || a_.cols() == 0)
    throw Error(ErrorCode::DimensionMismatch, "constraint matrix is empty");
  if (b_.size() != a_.rows() || c_.size() != a_.cols())
    throw Error(ErrorCode::DimensionMismatch, "b must have d entries and c must have n entries");
  if (rank(a_) < a_.rows())
    throw Error(ErrorCode::RankDeficient, "constraint matrix does not have full row rank");
  if (!checkPointed(a_))
    throw Error(ErrorCode::InvalidInput, "kernel of A meets the nonnegative orthant");
}

IpInstance IpInstance::withRhs(IntVector b) const {
  IpInstance out = *this;
  if (b.size() != a_.rows())
    throw Error(ErrorCode::DimensionMismatch, "right-hand side length differs from row count");
  out.b_ = std::move(b);
  return out;
}

LpBasisResult lpSolve(const IpInstance& inst) {
  const LpSolution sol =
      solveStandardForm(toRationalMatrix(inst.A()), toRational(inst.b()), inst.c());
  LpBasisResult out;
  out.basic = sol.basis;
  for (Index j = 0; j < inst.cols(); ++j)
    if (!std::binary_search(out.basic.begin(), out.basic.end(), j)) out.nonbasic.push_back(j);
  out.value = sol.value;
  out.x = sol.x;
  out.reducedCosts = selectEntries(sol.reducedCosts, out.nonbasic);
  out.unique = (out.reducedCosts.array() > Rational(0)).all();
  return out;
}

GroupRelaxation buildRelaxation(const IpInstance& inst) {
  BasisData data = basisData(inst);
  // Lambda(A) = pi_nonbasic(Lat(A)); injective because A_tau is nonsingular.
  const IntMatrix kernel = kernelLattice(inst.A());
  LatticeBasis lattice(hnf(selectColumns(kernel, data.lp.nonbasic)));
  IntVector residue = reduceResidue(lattice, std::move(data.residue));
  return GroupRelaxation{std::move(lattice), CostVector(std::move(data.costs)),
                         std::move(residue), std::move(data.constant), std::move(data.lp)};
}

GroupRelaxation singleRowRelaxation(const IpInstance& inst, Index row) {
  if (row < 0 || row >= inst.rows())
    throw Error(ErrorCode::InvalidInput, "row index out of range");
  BasisData data = basisData(inst);
  const Index k = static_cast<Index>(data.lp.nonbasic.size());
  const Integer D = detAbs(selectColumns(inst.A(), data.lp.basic));
  const RatVector ahat =
      (data.basisInverse * toRationalMatrix(selectColumns(inst.A(), data.lp.nonbasic)))
          .row(row)
          .transpose();
  const Rational bhat = data.basisInverse.row(row).dot(toRational(inst.b()));

  // D * A_tau^{-1} is integral, so every D * ahat_ij is an integer.
  IntMatrix constraint(1, k + 1);
  for (Index j = 0; j < k; ++j) constraint(0, j) = floorMod(numerator(ahat(j) * D), D);
  constraint(0, k) = D;
  const Integer rhs = floorMod(numerator(bhat * D), D);

  Integer lhs = 0;
  for (Index j = 0; j < k; ++j) lhs += constraint(0, j) * data.residue(j);
  if (floorMod(lhs - rhs, D) != 0)
    throw Error(ErrorCode::NoIntegerSolution, "row congruence has no integer solution");

  LatticeBasis lattice = projectedKernel(constraint);
  IntVector residue = reduceResidue(lattice, std::move(data.residue));
  return GroupRelaxation{std::move(lattice), CostVector(std::move(data.costs)),
                         std::move(residue), std::move(data.constant), std::move(data.lp)};
}

RelaxationSolution solveRelaxation(const GroupRelaxation& rel, const SolverOptions& options) {
  const GroupInstance inst = rel.instance();
  const GroupSolution sol = minimize(inst, rel.residue, options);
  return RelaxationSolution{sol.value + rel.constant, sol.value, sol.minimizer};
}

WitnessRhs witnessRhs(const IpInstance& inst, const GroupRelaxation& rel,
                      const GapCertificate& cert) {
  if (inst.rows() != 1)
    throw Error(ErrorCode::InvalidInput, "witness right-hand side is defined for knapsacks (d = 1)");
  const auto& nonbasic = rel.lp.nonbasic;
  if (cert.witnessX.size() != static_cast<Index>(nonbasic.size()))
    throw Error(ErrorCode::DimensionMismatch, "certificate does not match the relaxation");
  WitnessRhs out;
  out.u = IntVector::Zero(inst.cols());
  for (std::size_t j = 0; j < nonbasic.size(); ++j)
    out.u(nonbasic[j]) = cert.witnessX(static_cast<Index>(j));
  out.bPrime = inst.A() * out.u;
  // constant(b') = c_tau A_tau^{-1} b'
  const Index tau = rel.lp.basic.front();
  out.predicted = cert.gap + inst.c()(tau) * Rational(out.bPrime(0), inst.A()(0, tau));
  return out;
}

std::optional<Rational> ipBruteForce(const IpInstance& inst, std::uint64_t box,
                                     const BruteForceOptions& options) {
  const Index d = inst.rows();
  const Index n = inst.cols();
  constexpr std::int64_t kLimit = std::int64_t{1} << 62;
  Integer maxEntry = 0;
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < n; ++j) maxEntry = std::max(maxEntry, Integer(abs(inst.A()(i, j))));
  for (Index i = 0; i < d; ++i)
    if (abs(inst.b()(i)) >= kLimit)
      throw Error(ErrorCode::ResourceLimitExceeded, "right-hand side too large for enumeration");
  if (maxEntry * Integer(box) * n >= kLimit)
    throw Error(ErrorCode::ResourceLimitExceeded, "enumeration box too large");

  Integer den = 1;
  for (Index j = 0; j < n; ++j) den = lcm(den, denominator(inst.c()(j)));
  std::vector<Integer> cost(n);
  for (Index j = 0; j < n; ++j) cost[j] = numerator(inst.c()(j) * den);

  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(d));
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < d; ++i) a[j][i] = static_cast<std::int64_t>(inst.A()(i, j));
  std::vector<std::int64_t> target(d);
  for (Index i = 0; i < d; ++i) target[i] = static_cast<std::int64_t>(inst.b()(i));
  // lo[j][i], hi[j][i]: range of row i attainable by columns j..n-1 in the box.
  const auto boxI = static_cast<std::int64_t>(box);
  std::vector<std::vector<std::int64_t>> lo(n + 1, std::vector<std::int64_t>(d, 0));
  std::vector<std::vector<std::int64_t>> hi(n + 1, std::vector<std::int64_t>(d, 0));
  for (Index j = n - 1; j >= 0; --j)
    for (Index i = 0; i < d; ++i) {
      lo[j][i] = lo[j + 1][i] + std::min<std::int64_t>(0, a[j][i] * boxI);
      hi[j][i] = hi[j + 1][i] + std::max<std::int64_t>(0, a[j][i] * boxI);
    }

  const bool nonnegativeCosts =
      std::all_of(cost.begin(), cost.end(), [](const Integer& v) { return v >= 0; });

  std::vector<std::int64_t> partial(d, 0);
  std::optional<Integer> best;
  Integer current = 0;
  std::uint64_t visits = 0;
  // Row i stays attainable by columns j..n-1 when target - partial lies in
  // [lo[j][i], hi[j][i]].  Raising x_j moves partial monotonically, so once
  // a row has left its range in the direction of travel the loop can stop.
  auto search = [&](auto&& self, Index j) -> void {
    if (++visits > options.maxVisits)
      throw Error(ErrorCode::ResourceLimitExceeded, "enumeration budget exhausted");
    if (j == n) {
      if (!best || current < *best) best = current;
      return;
    }
    std::int64_t v = 0;
    for (; v <= boxI; ++v) {
      if (v > 0) {
        for (Index i = 0; i < d; ++i) partial[i] += a[j][i];
        current += cost[j];
      }
      if (nonnegativeCosts && best && current >= *best) break;
      bool feasible = true;
      bool hopeless = false;
      for (Index i = 0; i < d; ++i) {
        const std::int64_t need = target[i] - partial[i];
        if (need < lo[j + 1][i]) {
          feasible = false;
          if (a[j][i] >= 0) hopeless = true;
        } else if (need > hi[j + 1][i]) {
          feasible = false;
          if (a[j][i] <= 0) hopeless = true;
        }
      }
      if (hopeless) break;
      if (feasible) self(self, j + 1);
    }
    const std::int64_t taken = std::min(v, boxI);
    for (Index i = 0; i < d; ++i) partial[i] -= a[j][i] * taken;
    current -= cost[j] * taken;
  };
  for (Index i = 0; i < d; ++i)
    if (target[i] < lo[0][i] || target[i] > hi[0][i]) return std::nullopt;
  search(search, 0);
  if (!best) return std::nullopt;
  return Rational(*best, den);
}

}  // namespace latgap
