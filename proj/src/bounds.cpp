#include "latgap/bounds.hpp"

#include <functional>

namespace latgap {

namespace {

Integer factorial(unsigned long n) {
  Integer f = 1;
  for (unsigned long i = 2; i <= n; ++i) f *= i;
  return f;
}

Rational costProduct(const CostVector& l) {
  Rational p = 1;
  for (Index i = 0; i < l.size(); ++i) p *= l.values()(i);
  return p;
}

Rational costSquares(const CostVector& l) {
  Rational s = 0;
  for (Index i = 0; i < l.size(); ++i) s += l.values()(i) * l.values()(i);
  return s;
}

void checkDimension(Index k, const CostVector& l) {
  if (k < 1) throw Error(ErrorCode::InvalidInput, "dimension must be positive");
  if (l.size() != k)
    throw Error(ErrorCode::DimensionMismatch, "cost length differs from dimension");
}

}  // namespace

std::optional<Rational> hermiteConstantPower(Index k) {
  switch (k) {
    case 1: return Rational(1);
    case 2: return Rational(4, 3);
    case 3: return Rational(2);
    case 4: return Rational(4);
    case 5: return Rational(8);
    case 6: return Rational(64, 3);
    case 7: return Rational(64);
    case 8: return Rational(256);
    default: return std::nullopt;
  }
}

Interval unitBallVolume(Index k) {
  const auto n = static_cast<unsigned long>(k);
  const Interval pi = Interval::pi();
  Interval piPower = pow(pi, n / 2);
  Interval gamma;
  if (n % 2 == 0) {
    gamma = Interval(factorial(n / 2));
  } else {
    piPower = piPower * sqrt(pi);
    // Gamma(m + 1/2) = (2m)! sqrt(pi) / (4^m m!),  m = (k + 1) / 2.
    const unsigned long m = (n + 1) / 2;
    const Integer fourPow = Integer(1) << (2 * m);
    gamma = Interval(Rational(factorial(2 * m), fourPow * factorial(m))) * sqrt(pi);
  }
  return piPower / gamma;
}

Interval hermiteFactor(Index k) {
  if (k < 1) throw Error(ErrorCode::InvalidInput, "dimension must be positive");
  if (const auto table = hermiteConstantPower(k)) return sqrt(Interval(*table));
  const auto n = static_cast<unsigned long>(k);
  Interval twoPower(Integer(1) << (n / 2));
  if (n % 2 == 1) twoPower = twoPower * sqrt(Interval(Rational(2)));
  return twoPower * Interval(Integer(k + 2)) / unitBallVolume(k);
}

DirectedBound lowerBoundRho(Index k, const Integer& det, const CostVector& l) {
  checkDimension(k, l);
  const Interval sum(l.sum());
  const Rational volume = Rational(det) * costProduct(l);
  if (k == 1) return {Interval(volume) - sum, Rounding::Down};
  if (k == 2) return {sqrt(Interval(volume * 3)) - sum, Rounding::Down};
  throw Error(ErrorCode::UnknownRhoK,
              "rho_k is known only for k <= 2 (k = " + std::to_string(k) + ")");
}

DirectedBound lowerBoundFactorial(Index k, const Integer& det, const CostVector& l) {
  checkDimension(k, l);
  if (k < 2) throw Error(ErrorCode::DimensionTooSmall, "factorial bound needs k >= 2");
  const auto n = static_cast<unsigned long>(k);
  const Rational inner = Rational(factorial(n) * det) * costProduct(l);
  return {root(Interval(inner), n) - Interval(l.sum()), Rounding::Down};
}

DirectedBound upperBound(Index k, const Integer& det, const CostVector& l) {
  checkDimension(k, l);
  if (k < 2) throw Error(ErrorCode::DimensionTooSmall, "upper bound needs k >= 2");
  const Interval sum(l.sum());
  const Interval norm = sqrt(Interval(costSquares(l)));
  const Interval scale(Rational(Integer(k) * det, 2));
  return {scale * hermiteFactor(k) * (sum + norm) - sum, Rounding::Up};
}

Inradius inradius(const CostVector& l) {
  const Rational squares = costSquares(l);
  Integer num, den;
  Inradius out;
  if (isPerfectSquare(numerator(squares), &num) && isPerfectSquare(denominator(squares), &den)) {
    out.exact = Rational(1) / (l.sum() + Rational(num, den));
    out.enclosure = Interval(*out.exact);
  } else {
    out.enclosure =
        Interval(Rational(1)) / (Interval(l.sum()) + sqrt(Interval(squares)));
  }
  return out;
}

Rational coveringRadius(const GroupInstance& inst, const GapCertificate& cert) {
  return cert.gap + inst.cost().sum();
}

Rational coveringRadius(const GroupInstance& inst, const SolverOptions& options) {
  return coveringRadius(inst, gap(inst, options));
}

GridCoverReport gridCoverCheck(const GroupInstance& inst, const Rational& rho,
                               const Rational& h, const GridCoverOptions& options) {
  const Index k = inst.dim();
  if (k > 3) throw Error(ErrorCode::InvalidInput, "grid check supports k <= 3");
  if (h <= 0) throw Error(ErrorCode::InvalidInput, "grid spacing must be positive");
  if (rho < 0) throw Error(ErrorCode::InvalidInput, "radius must be nonnegative");

  const IntMatrix H = hnf(inst.basis().rows());
  std::vector<Integer> extent(k);
  Integer total = 1;
  for (Index j = 0; j < k; ++j) {
    extent[j] = ceil(Rational(H(j, j)) / h);
    total *= extent[j];
  }
  if (total > Integer(options.maxPoints))
    throw Error(ErrorCode::ResolutionTooFine,
                "grid has " + total.str() + " points (limit " +
                    std::to_string(options.maxPoints) + ")");

  const RatVector& l = inst.cost().values();
  RatVector p(k);
  std::vector<Rational> partial(k);
  // Lattice points are y H with H upper triangular, so coordinate j of
  // lambda depends on y_0..y_j only and y can be enumerated level by level
  // inside the region lambda <= p, l.(p - lambda) <= rho.
  std::function<bool(Index, const Rational&)> reach = [&](Index j, const Rational& budget) {
    if (j == k) return true;
    const Rational hjj(H(j, j));
    const Integer yHi = floor((p(j) - partial[j]) / hjj);
    const Integer yLo = ceil((p(j) - budget / l(j) - partial[j]) / hjj);
    for (Integer y = yHi; y >= yLo; --y) {
      const Rational lambdaJ = partial[j] + Rational(y) * hjj;
      const Rational rest = budget - l(j) * (p(j) - lambdaJ);
      for (Index i = j + 1; i < k; ++i) partial[i] += Rational(y * H(j, i));
      const bool found = reach(j + 1, rest);
      for (Index i = j + 1; i < k; ++i) partial[i] -= Rational(y * H(j, i));
      if (found) return true;
    }
    return false;
  };

  GridCoverReport report;
  report.rho = rho;
  report.h = h;
  std::vector<Integer> step(k, Integer(0));
  for (;;) {
    for (Index j = 0; j < k; ++j) {
      p(j) = Rational(step[j]) * h;
      partial[j] = 0;
    }
    ++report.pointsChecked;
    if (!reach(0, rho)) {
      ++report.uncoveredCount;
      if (report.uncovered.size() < options.maxReported) report.uncovered.push_back(p);
    }
    Index j = k - 1;
    for (; j >= 0; --j) {
      if (++step[j] < extent[j]) break;
      step[j] = 0;
    }
    if (j < 0) break;
  }
  return report;
}

bool BoundsReport::consistent() const {
  if (!gap) return true;
  if (lowerRho && !lowerRho->enclosure.lowerAtMost(*gap)) return false;
  if (lowerFactorial && !lowerFactorial->enclosure.upperBelow(*gap)) return false;
  if (upper && !upper->enclosure.upperAtLeast(*gap)) return false;
  return true;
}

BoundsReport boundsReport(const GroupInstance& inst, std::optional<Rational> gap) {
  BoundsReport r;
  r.k = inst.dim();
  r.det = inst.basis().detAbs();
  const CostVector& l = inst.cost();
  if (r.k <= 2) r.lowerRho = lowerBoundRho(r.k, r.det, l);
  if (r.k >= 2) {
    r.lowerFactorial = lowerBoundFactorial(r.k, r.det, l);
    r.upper = upperBound(r.k, r.det, l);
  }
  r.inradius = inradius(l);
  r.gap = std::move(gap);
  return r;
}

}  // namespace latgap
