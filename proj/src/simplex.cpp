#include "latgap/simplex.hpp"

#include <algorithm>
#include <optional>

namespace latgap {

namespace {

// Tableau rows are B^{-1} [A | b]; the last column is the right-hand side.
struct Tableau {
  RatMatrix t;
  std::vector<Index> basis;

  Index columns() const { return t.cols() - 1; }

  void pivot(Index row, Index col) {
    const Rational p = t(row, col);
    t.row(row) /= p;
    for (Index i = 0; i < t.rows(); ++i) {
      if (i == row || t(i, col) == 0) continue;
      const Rational f = t(i, col);
      t.row(i) -= f * t.row(row);
    }
    basis[row] = col;
  }

  Rational reducedCost(const RatVector& c, Index j) const {
    Rational r = c(j);
    for (Index i = 0; i < t.rows(); ++i) r -= c(basis[i]) * t(i, j);
    return r;
  }

  Rational objective(const RatVector& c) const {
    Rational v = 0;
    for (Index i = 0; i < t.rows(); ++i) v += c(basis[i]) * t(i, t.cols() - 1);
    return v;
  }

  // Bland's rule: lowest-index improving column, ties in the ratio test
  // broken by lowest basic index.
  void optimize(const RatVector& c) {
    const Index rhs = t.cols() - 1;
    for (;;) {
      Index entering = -1;
      for (Index j = 0; j < columns(); ++j) {
        if (std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
        if (reducedCost(c, j) < 0) { entering = j; break; }
      }
      if (entering < 0) return;
      Index leaving = -1;
      Rational best;
      for (Index i = 0; i < t.rows(); ++i) {
        if (t(i, entering) <= 0) continue;
        const Rational ratio = t(i, rhs) / t(i, entering);
        if (leaving < 0 || ratio < best || (ratio == best && basis[i] < basis[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (leaving < 0) throw Error(ErrorCode::LpUnbounded, "objective is unbounded below");
      pivot(leaving, entering);
    }
  }
};

}  // namespace

LpSolution solveStandardForm(const RatMatrix& a, const RatVector& b, const RatVector& c) {
  const Index d = a.rows();
  const Index n = a.cols();
  if (b.size() != d || c.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "LP data dimensions disagree");

  Tableau tab;
  tab.t = RatMatrix::Zero(d, n + d + 1);
  for (Index i = 0; i < d; ++i) {
    const bool flip = b(i) < 0;
    for (Index j = 0; j < n; ++j) tab.t(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
    tab.t(i, n + i) = 1;
    tab.t(i, n + d) = flip ? Rational(-b(i)) : b(i);
    tab.basis.push_back(n + i);
  }
  RatVector phaseOne = RatVector::Zero(n + d);
  for (Index i = 0; i < d; ++i) phaseOne(n + i) = 1;
  tab.optimize(phaseOne);
  if (tab.objective(phaseOne) > 0)
    throw Error(ErrorCode::LpInfeasible, "no nonnegative solution of A x = b");

  for (Index i = 0; i < d; ++i) {
    if (tab.basis[i] < n) continue;
    Index col = -1;
    for (Index j = 0; j < n && col < 0; ++j)
      if (tab.t(i, j) != 0) col = j;
    if (col < 0) throw Error(ErrorCode::RankDeficient, "constraint rows are dependent");
    tab.pivot(i, col);
  }

  Tableau second;
  second.t.resize(d, n + 1);
  second.t.leftCols(n) = tab.t.leftCols(n);
  second.t.col(n) = tab.t.col(n + d);
  second.basis = tab.basis;
  second.optimize(c);

  LpSolution out;
  out.x = RatVector::Zero(n);
  for (Index i = 0; i < d; ++i) out.x(second.basis[i]) = second.t(i, n);
  out.value = second.objective(c);
  out.reducedCosts = RatVector::Zero(n);
  for (Index j = 0; j < n; ++j) out.reducedCosts(j) = second.reducedCost(c, j);
  out.basis = second.basis;
  std::sort(out.basis.begin(), out.basis.end());
  return out;
}

RatMatrix solveExact(const RatMatrix& m, const RatMatrix& rhs) {
  const Index n = m.rows();
  if (m.cols() != n || rhs.rows() != n)
    throw Error(ErrorCode::DimensionMismatch, "solveExact needs a square system");
  RatMatrix a = m;
  RatMatrix x = rhs;
  for (Index col = 0; col < n; ++col) {
    Index p = col;
    while (p < n && a(p, col) == 0) ++p;
    if (p == n) throw Error(ErrorCode::SingularBasis, "matrix is singular");
    if (p != col) {
      a.row(p).swap(a.row(col));
      x.row(p).swap(x.row(col));
    }
    const Rational pivot = a(col, col);
    a.row(col) /= pivot;
    x.row(col) /= pivot;
    for (Index i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      a.row(i) -= f * a.row(col);
      x.row(i) -= f * x.row(col);
    }
  }
  return x;
}

}  // namespace latgap
