#pragma once

// Exact integer linear algebra over Z.
//
// Convention: lattice bases store basis vectors as ROWS.  A lattice with
// basis B is { y * B : y in Z^k } where y is a row vector.  All normal
// forms below act on rows accordingly.

#include "latgap/error.hpp"
#include "latgap/scalar.hpp"

#include <optional>
#include <vector>

namespace latgap {

namespace detail {
IntMatrix hnf(IntMatrix m);
IntMatrix hnfOfGenerators(IntMatrix m);
Index rank(IntMatrix m);
Integer determinant(IntMatrix m);
IntMatrix kernelLattice(const IntMatrix& a);
}  // namespace detail

/// Row-style Hermite normal form of a matrix with full row rank.
///
/// Rows are in echelon form with strictly increasing pivot columns, every
/// pivot is positive and each entry above a pivot lies in [0, pivot).  The
/// Z-span of the rows is preserved.  Throws RankDeficient when the rows are
/// linearly dependent.
template <typename Derived>
IntMatrix hnf(const Eigen::MatrixBase<Derived>& m) {
  return detail::hnf(m.derived().template cast<Integer>());
}

/// Hermite normal form of the lattice generated by the rows of `m`; zero
/// rows are dropped, so the result has rank(m) rows.
template <typename Derived>
IntMatrix hnfOfGenerators(const Eigen::MatrixBase<Derived>& m) {
  return detail::hnfOfGenerators(m.derived().template cast<Integer>());
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return detail::rank(m.derived().template cast<Integer>());
}

/// Signed determinant by fraction-free (Bareiss) elimination.
template <typename Derived>
Integer determinant(const Eigen::MatrixBase<Derived>& m) {
  return detail::determinant(m.derived().template cast<Integer>());
}

template <typename Derived>
Integer detAbs(const Eigen::MatrixBase<Derived>& m) {
  return abs(determinant(m));
}

/// Basis (as rows) of the saturated integer kernel {x in Z^n : A x = 0}.
///
/// `a` must have full row rank d; the result is (n - d) x n and is in
/// Hermite normal form.  Throws RankDeficient otherwise.
template <typename Derived>
IntMatrix kernelLattice(const Eigen::MatrixBase<Derived>& a) {
  return detail::kernelLattice(a.derived().template cast<Integer>());
}

/// Full-dimensional lattice in Z^k given by k linearly independent rows.
class LatticeBasis {
 public:
  explicit LatticeBasis(IntMatrix rows);

  template <typename Derived>
  static LatticeBasis fromRows(const Eigen::MatrixBase<Derived>& rows) {
    return LatticeBasis(IntMatrix(rows.derived().template cast<Integer>()));
  }

  Index dim() const { return rows_.rows(); }
  const IntMatrix& rows() const { return rows_; }
  const Integer& detAbs() const { return det_abs_; }

 private:
  IntMatrix rows_;
  Integer det_abs_;
};

inline Integer detAbs(const LatticeBasis& basis) { return basis.detAbs(); }

/// Smith normal form U * A * V = S of an arbitrary m x n integer matrix.
///
/// S is zero off the diagonal; diagonal(i) = S(i, i) for i < min(m, n), with
/// the nonzero entries first, positive, and forming a divisibility chain.
struct SmithForm {
  IntMatrix U;     // m x m, unimodular
  IntMatrix V;     // n x n, unimodular
  IntMatrix Vinv;  // inverse of V
  IntVector diagonal;
  Index rank = 0;
};

SmithForm smithForm(const IntMatrix& a);

template <typename Derived>
SmithForm smithForm(const Eigen::MatrixBase<Derived>& a) {
  return smithForm(IntMatrix(a.derived().template cast<Integer>()));
}

/// Z^k / Lambda presented as the product of cyclic groups Z_{d_i}.
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix V;
  IntMatrix Vinv;
  IntVector invariants;  // d_1 | d_2 | ... | d_k, all positive
  Integer order;         // product of the invariants = |det B|

  Index dim() const { return invariants.size(); }
};

/// Throws SingularBasis for a singular square matrix.
SnfDecomposition snf(const LatticeBasis& basis);

/// Coset of x + Lambda: digits u with 0 <= u_i < d_i and the mixed-radix
/// index sum_i u_i * (d_1 ... d_{i-1}), so the first digit varies fastest.
struct CosetLabel {
  IntVector digits;
  Integer index;

  friend bool operator==(const CosetLabel& a, const CosetLabel& b) {
    return a.index == b.index && a.digits == b.digits;
  }
};

/// label(x) = (x V) mod d.  With row bases, x in Lambda iff x V = z diag(d)
/// for an integer row vector z, so the label is constant exactly on cosets.
CosetLabel cosetLabel(const SnfDecomposition& s, const IntVector& x);
CosetLabel labelFromIndex(const SnfDecomposition& s, const Integer& index);
/// Some x with cosetLabel(x) == label; returns digits * V^{-1}.
IntVector cosetLift(const SnfDecomposition& s, const CosetLabel& label);

/// Decides x in Lambda by back-substitution against a cached HNF.
class MembershipTest {
 public:
  explicit MembershipTest(const LatticeBasis& basis);

  bool contains(const IntVector& x) const;
  const IntMatrix& hermite() const { return hermite_; }

 private:
  IntMatrix hermite_;
  std::vector<Index> pivots_;
};

bool isMember(const LatticeBasis& basis, const IntVector& x);

template <typename Derived>
bool isMember(const LatticeBasis& basis, const Eigen::MatrixBase<Derived>& x) {
  return isMember(basis, IntVector(x.derived().template cast<Integer>()));
}

/// Some integer u with A u = b, or nullopt when none exists.
std::optional<IntVector> solveIntegerSystem(const IntMatrix& a,
                                            const IntVector& b);

}  // namespace latgap
