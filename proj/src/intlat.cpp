#include "latgap/intlat.hpp"

#include <utility>

namespace latgap {

namespace {

// In-place row echelon form with Hermite normalization.  Returns the rank;
// rows [rank, m) are zero afterwards.
Index echelonize(IntMatrix& m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    for (;;) {
      Index best = -1;
      for (Index i = row; i < rows; ++i) {
        if (m(i, col) == 0) continue;
        if (best < 0 || abs(m(i, col)) < abs(m(best, col))) best = i;
      }
      if (best < 0) break;
      if (best != row) m.row(best).swap(m.row(row));
      bool cleared = true;
      for (Index i = row + 1; i < rows; ++i) {
        if (m(i, col) == 0) continue;
        const Integer q = floorDiv(m(i, col), m(row, col));
        m.row(i) -= q * m.row(row);
        if (m(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (m(row, col) == 0) continue;
    if (m(row, col) < 0) m.row(row) = -m.row(row);
    for (Index i = 0; i < row; ++i) {
      const Integer q = floorDiv(m(i, col), m(row, col));
      if (q != 0) m.row(i) -= q * m.row(row);
    }
    ++row;
  }
  return row;
}

IntMatrix identity(Index n) {
  IntMatrix id = IntMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

}  // namespace

namespace detail {

IntMatrix hnf(IntMatrix m) {
  const Index r = echelonize(m);
  if (r < m.rows())
    throw Error(ErrorCode::RankDeficient, "rows are linearly dependent");
  return m;
}

IntMatrix hnfOfGenerators(IntMatrix m) {
  const Index r = echelonize(m);
  return m.topRows(r);
}

Index rank(IntMatrix m) { return echelonize(m); }

Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const Index n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer previous = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index swap = -1;
      for (Index i = k + 1; i < n; ++i)
        if (m(i, k) != 0) { swap = i; break; }
      if (swap < 0) return 0;
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        // Bareiss: exact division by the previous pivot.
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix kernelLattice(const IntMatrix& a) {
  const Index d = a.rows();
  const Index n = a.cols();
  IntMatrix aug(n, d + n);
  aug.leftCols(d) = a.transpose();
  aug.rightCols(n) = identity(n);
  echelonize(aug);
  // Unimodular row operations on [A^T | I]: the rows whose A^T-part vanished
  // carry a basis of the saturated left kernel of A^T.
  Index pivots = 0;
  for (Index i = 0; i < n; ++i) {
    if (!aug.row(i).leftCols(d).isZero()) ++pivots;
  }
  if (pivots < d)
    throw Error(ErrorCode::RankDeficient, "matrix does not have full row rank");
  return aug.bottomRows(n - d).rightCols(n);
}

}  // namespace detail

LatticeBasis::LatticeBasis(IntMatrix rows) : rows_(std::move(rows)) {
  if (rows_.rows() == 0 || rows_.rows() != rows_.cols())
    throw Error(ErrorCode::DimensionMismatch,
                "lattice basis must be a non-empty square matrix");
  det_abs_ = abs(detail::determinant(rows_));
  if (det_abs_ == 0)
    throw Error(ErrorCode::SingularBasis, "basis rows are linearly dependent");
}

SmithForm smithForm(const IntMatrix& a) {
  const Index m = a.rows();
  const Index n = a.cols();
  SmithForm out;
  out.U = identity(m);
  out.V = identity(n);
  out.Vinv = identity(n);
  IntMatrix s = a;
  IntMatrix& U = out.U;
  IntMatrix& V = out.V;
  IntMatrix& Vinv = out.Vinv;

  auto swapCols = [&](Index j1, Index j2) {
    s.col(j1).swap(s.col(j2));
    V.col(j1).swap(V.col(j2));
    Vinv.row(j1).swap(Vinv.row(j2));
  };
  // col_j -= q * col_t
  auto colAxpy = [&](Index j, Index t, const Integer& q) {
    s.col(j) -= q * s.col(t);
    V.col(j) -= q * V.col(t);
    Vinv.row(t) += q * Vinv.row(j);
  };
  auto rowAxpy = [&](Index i, Index t, const Integer& q) {
    s.row(i) -= q * s.row(t);
    U.row(i) -= q * U.row(t);
  };

  const Index diag = std::min(m, n);
  Index t = 0;
  for (; t < diag; ++t) {
    for (;;) {
      Index bi = -1, bj = -1;
      for (Index i = t; i < m; ++i)
        for (Index j = t; j < n; ++j) {
          if (s(i, j) == 0) continue;
          if (bi < 0 || abs(s(i, j)) < abs(s(bi, bj))) { bi = i; bj = j; }
        }
      if (bi < 0) goto done;
      if (bi != t) {
        s.row(bi).swap(s.row(t));
        U.row(bi).swap(U.row(t));
      }
      if (bj != t) swapCols(bj, t);

      bool cleared = true;
      for (Index i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        rowAxpy(i, t, floorDiv(s(i, t), s(t, t)));
        if (s(i, t) != 0) cleared = false;
      }
      for (Index j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        colAxpy(j, t, floorDiv(s(t, j), s(t, t)));
        if (s(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;

      Index bad = -1;
      for (Index i = t + 1; i < m && bad < 0; ++i)
        for (Index j = t + 1; j < n; ++j)
          if (floorMod(s(i, j), s(t, t)) != 0) { bad = i; break; }
      if (bad < 0) break;
      // Fold the offending row into row t; the next pass shrinks the pivot.
      s.row(t) += s.row(bad);
      U.row(t) += U.row(bad);
    }
    if (s(t, t) < 0) {
      s.row(t) = -s.row(t);
      U.row(t) = -U.row(t);
    }
  }
done:
  out.rank = t;
  out.diagonal = IntVector::Zero(diag);
  for (Index i = 0; i < diag; ++i) out.diagonal(i) = s(i, i);
  return out;
}

SnfDecomposition snf(const LatticeBasis& basis) {
  SmithForm f = smithForm(basis.rows());
  if (f.rank < basis.dim())
    throw Error(ErrorCode::SingularBasis, "basis is singular");
  SnfDecomposition s;
  s.U = std::move(f.U);
  s.V = std::move(f.V);
  s.Vinv = std::move(f.Vinv);
  s.invariants = std::move(f.diagonal);
  s.order = 1;
  for (Index i = 0; i < s.invariants.size(); ++i) s.order *= s.invariants(i);
  return s;
}

CosetLabel cosetLabel(const SnfDecomposition& s, const IntVector& x) {
  if (x.size() != s.dim())
    throw Error(ErrorCode::DimensionMismatch, "vector dimension differs from lattice");
  const IntVector y = s.V.transpose() * x;
  CosetLabel label;
  label.digits.resize(s.dim());
  label.index = 0;
  Integer stride = 1;
  for (Index i = 0; i < s.dim(); ++i) {
    label.digits(i) = floorMod(y(i), s.invariants(i));
    label.index += label.digits(i) * stride;
    stride *= s.invariants(i);
  }
  return label;
}

CosetLabel labelFromIndex(const SnfDecomposition& s, const Integer& index) {
  if (index < 0 || index >= s.order)
    throw Error(ErrorCode::InvalidInput, "coset index out of range");
  CosetLabel label;
  label.index = index;
  label.digits.resize(s.dim());
  Integer rest = index;
  for (Index i = 0; i < s.dim(); ++i) {
    label.digits(i) = rest % s.invariants(i);
    rest /= s.invariants(i);
  }
  return label;
}

IntVector cosetLift(const SnfDecomposition& s, const CosetLabel& label) {
  if (label.digits.size() != s.dim())
    throw Error(ErrorCode::DimensionMismatch, "label dimension differs from lattice");
  for (Index i = 0; i < s.dim(); ++i)
    if (label.digits(i) < 0 || label.digits(i) >= s.invariants(i))
      throw Error(ErrorCode::InvalidInput, "label digit out of range");
  return s.Vinv.transpose() * label.digits;
}

MembershipTest::MembershipTest(const LatticeBasis& basis)
    : hermite_(hnf(basis.rows())) {
  pivots_.reserve(hermite_.rows());
  for (Index i = 0; i < hermite_.rows(); ++i) {
    Index p = 0;
    while (hermite_(i, p) == 0) ++p;
    pivots_.push_back(p);
  }
}

bool MembershipTest::contains(const IntVector& x) const {
  if (x.size() != hermite_.cols())
    throw Error(ErrorCode::DimensionMismatch, "vector dimension differs from lattice");
  IntVector rest = x;
  for (Index i = 0; i < hermite_.rows(); ++i) {
    const Index p = pivots_[i];
    const Integer& pivot = hermite_(i, p);
    if (rest(p) % pivot != 0) return false;
    const Integer q = rest(p) / pivot;
    if (q != 0) rest -= q * hermite_.row(i).transpose();
  }
  return rest.isZero();
}

bool isMember(const LatticeBasis& basis, const IntVector& x) {
  return MembershipTest(basis).contains(x);
}

std::optional<IntVector> solveIntegerSystem(const IntMatrix& a,
                                            const IntVector& b) {
  if (b.size() != a.rows())
    throw Error(ErrorCode::DimensionMismatch, "right-hand side length differs from row count");
  const SmithForm f = smithForm(a);
  // U A V = S, so A u = b  <=>  S (V^{-1} u) = U b.
  const IntVector ub = f.U * b;
  IntVector y = IntVector::Zero(a.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    if (i >= f.rank) {
      if (ub(i) != 0) return std::nullopt;
      continue;
    }
    if (ub(i) % f.diagonal(i) != 0) return std::nullopt;
    y(i) = ub(i) / f.diagonal(i);
  }
  return IntVector(f.V * y);
}

}  // namespace latgap
