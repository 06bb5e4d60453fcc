#pragma once

// Random instance generators and reference computations that do not go
// through the library's normal forms.

#include "latgap/frobenius.hpp"
#include "latgap/gomory.hpp"
#include "latgap/groupsolve.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace latgap::testing {

using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline IntMatrix intMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  IntMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline IntVector intVector(std::initializer_list<long long> v) {
  IntVector out(static_cast<Index>(v.size()));
  Index i = 0;
  for (long long x : v) out(i++) = x;
  return out;
}

inline RatVector ratVector(std::initializer_list<Rational> v) {
  RatVector out(static_cast<Index>(v.size()));
  Index i = 0;
  for (const Rational& x : v) out(i++) = x;
  return out;
}

// Product of a few elementary row operations with small multipliers.
inline IntMatrix randomUnimodular(Index k, Rng& rng, int steps = 6) {
  IntMatrix u = IntMatrix::Identity(k, k);
  if (k == 1) {
    if (uniform(rng, 0, 1)) u(0, 0) = -1;
    return u;
  }
  for (int s = 0; s < steps; ++s) {
    const Index i = uniform(rng, 0, k - 1);
    Index j = uniform(rng, 0, k - 2);
    if (j >= i) ++j;
    const long long f = uniform(rng, -2, 2);
    u.row(i) += Integer(f) * u.row(j);
    if (uniform(rng, 0, 3) == 0) u.row(i).swap(u.row(j));
  }
  return u;
}

// Hermite form with |det| = det: random diagonal factorization, entries
// above each pivot in [0, pivot).
inline IntMatrix randomHermite(Index k, long long det, Rng& rng) {
  IntMatrix h = IntMatrix::Zero(k, k);
  long long rest = det;
  std::vector<long long> diag(k, 1);
  for (Index i = 0; i + 1 < k; ++i) {
    std::vector<long long> divisors;
    for (long long d = 1; d <= rest; ++d)
      if (rest % d == 0) divisors.push_back(d);
    diag[i] = divisors[uniform(rng, 0, static_cast<long long>(divisors.size()) - 1)];
    rest /= diag[i];
  }
  diag[k - 1] = rest;
  std::shuffle(diag.begin(), diag.end(), rng);
  for (Index i = 0; i < k; ++i) {
    h(i, i) = diag[i];
    for (Index j = i + 1; j < k; ++j) h(i, j) = uniform(rng, 0, diag[j] - 1);
  }
  return h;
}

inline LatticeBasis randomLattice(Index k, long long det, Rng& rng) {
  return LatticeBasis(IntMatrix(randomUnimodular(k, rng) * randomHermite(k, det, rng)));
}

inline CostVector randomCosts(Index k, Rng& rng, long long maxNum = 9, long long maxDen = 1) {
  RatVector l(k);
  for (Index i = 0; i < k; ++i) l(i) = Rational(uniform(rng, 1, maxNum), uniform(rng, 1, maxDen));
  return CostVector(l);
}

// Determinant by permutation expansion.
inline Integer leibnizDeterminant(const IntMatrix& m) {
  const Index n = m.rows();
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    Integer term = 1;
    int inversions = 0;
    for (Index i = 0; i < n; ++i) {
      term *= m(i, perm[i]);
      for (Index j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    }
    total += inversions % 2 ? Integer(-term) : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Coordinates y with y B = x over Q by Gaussian elimination on B^T.
inline std::optional<RatVector> rationalCoordinates(const IntMatrix& b, const IntVector& x) {
  const Index k = b.rows();
  RatMatrix a(k, k + 1);
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) a(i, j) = Rational(b(j, i));
    a(i, k) = Rational(x(i));
  }
  for (Index c = 0; c < k; ++c) {
    Index p = c;
    while (p < k && a(p, c) == 0) ++p;
    if (p == k) return std::nullopt;
    a.row(p).swap(a.row(c));
    const Rational piv = a(c, c);
    a.row(c) /= piv;
    for (Index i = 0; i < k; ++i)
      if (i != c && a(i, c) != 0) {
        const Rational f = a(i, c);
        a.row(i) -= f * a.row(c);
      }
  }
  return RatVector(a.col(k));
}

inline bool memberByCoordinates(const IntMatrix& b, const IntVector& x) {
  const auto y = rationalCoordinates(b, x);
  if (!y) return false;
  for (Index i = 0; i < y->size(); ++i)
    if (denominator((*y)(i)) != 1) return false;
  return true;
}

// Smith invariants as quotients of determinantal divisors (gcd of the
// i x i minors), for k <= 3.
inline IntVector invariantsFromMinors(const IntMatrix& m) {
  const Index k = m.rows();
  std::vector<Integer> divisor(k + 1, Integer(0));
  divisor[0] = 1;
  std::vector<Index> all(k);
  std::iota(all.begin(), all.end(), 0);
  for (Index size = 1; size <= k; ++size) {
    std::vector<bool> rowSel(k, false), colSel(k, false);
    std::fill(rowSel.begin(), rowSel.begin() + size, true);
    Integer g = 0;
    do {
      std::fill(colSel.begin(), colSel.end(), false);
      std::fill(colSel.begin(), colSel.begin() + size, true);
      do {
        IntMatrix minor(size, size);
        Index r = 0;
        for (Index i = 0; i < k; ++i) {
          if (!rowSel[i]) continue;
          Index c = 0;
          for (Index j = 0; j < k; ++j)
            if (colSel[j]) minor(r, c++) = m(i, j);
          ++r;
        }
        g = gcd(g, abs(leibnizDeterminant(minor)));
      } while (std::prev_permutation(colSel.begin(), colSel.end()));
    } while (std::prev_permutation(rowSel.begin(), rowSel.end()));
    divisor[size] = g;
  }
  IntVector inv(k);
  for (Index i = 0; i < k; ++i) inv(i) = divisor[i + 1] / divisor[i];
  return inv;
}

// Largest integer not representable, by reachability up to a_min * a_max.
inline long long representabilityFrobenius(const std::vector<long long>& a) {
  const long long lo = *std::min_element(a.begin(), a.end());
  const long long hi = *std::max_element(a.begin(), a.end());
  const long long limit = lo * hi + 1;
  std::vector<bool> reach(limit, false);
  reach[0] = true;
  long long largest = -1;
  for (long long t = 0; t < limit; ++t) {
    if (!reach[t]) {
      largest = t;
      continue;
    }
    for (long long s : a)
      if (t + s < limit) reach[t + s] = true;
  }
  return largest;
}

inline FrobeniusInput frobeniusInput(const std::vector<long long>& a) {
  std::vector<Integer> v(a.begin(), a.end());
  return FrobeniusInput(std::move(v));
}

// Group minimum by scanning x in [0, box]^k with rational-coordinate
// membership; for small instances only.
inline std::optional<Rational> scanMinimum(const LatticeBasis& basis, const CostVector& l,
                                           const IntVector& r, long long box) {
  const Index k = basis.dim();
  std::optional<Rational> best;
  IntVector x = IntVector::Zero(k);
  for (;;) {
    const Rational value = l.dot(x);
    if ((!best || value < *best) && memberByCoordinates(basis.rows(), IntVector(x - r)))
      best = value;
    Index i = 0;
    for (; i < k; ++i) {
      if (x(i) < box) {
        x(i) += 1;
        break;
      }
      x(i) = 0;
    }
    if (i == k) break;
  }
  return best;
}

// Random knapsack IP with generic reduced costs and feasible right-hand
// side b = A x0.
struct Knapsack {
  IpInstance ip;
  long long box;
};

inline Knapsack randomKnapsack(Rng& rng, Index maxN = 5, long long maxEntry = 30) {
  for (;;) {
    const Index n = uniform(rng, 2, maxN);
    IntMatrix a(1, n);
    Integer g = 0;
    for (Index j = 0; j < n; ++j) {
      a(0, j) = uniform(rng, 1, maxEntry);
      g = gcd(g, a(0, j));
    }
    if (g != 1) continue;
    RatVector c(n);
    for (Index j = 0; j < n; ++j) c(j) = Rational(uniform(rng, 1, 9), uniform(rng, 1, 3));
    long long b = 0;
    for (Index j = 0; j < n; ++j) b += static_cast<long long>(a(0, j)) * uniform(rng, 0, 3);
    IpInstance ip(a, intVector({b}), c);
    try {
      buildRelaxation(ip);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NonGenericReducedCosts) continue;
      throw;
    }
    return Knapsack{ip, b};
  }
}

}  // namespace latgap::testing
