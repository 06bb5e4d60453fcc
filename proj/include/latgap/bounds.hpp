#pragma once

// Lower and upper bounds on gap(Lambda, l) in terms of det(Lambda) and l,
// the inradius of Delta_l = { x >= 0 : l.x <= 1 }, and the covering radius
// rho(Delta_l, Lambda) = gap(Lambda, l) + sum(l).
//
// Bounds are returned as enclosures; lower bounds are reported rounded
// toward -infinity and upper bounds toward +infinity.

#include "latgap/groupsolve.hpp"
#include "latgap/interval.hpp"

#include <optional>
#include <vector>

namespace latgap {

enum class Rounding { Down, Up };

struct DirectedBound {
  Interval enclosure;
  Rounding rounding;

  double value() const {
    return rounding == Rounding::Down ? enclosure.lower() : enclosure.upper();
  }
};

/// gamma_k^k for k = 1..8 (1, 4/3, 2, 4, 8, 64/3, 64, 256); nullopt above.
std::optional<Rational> hermiteConstantPower(Index k);

/// Enclosure of an upper estimate for gamma_k^{k/2}: the square root of the
/// tabulated gamma_k^k for k <= 8, Blichfeldt's
///   gamma_k^{k/2} <= 2^{k/2} (k + 2) / sigma_k,
///   sigma_k = pi^{k/2} / Gamma(k/2 + 1)
/// beyond.
Interval hermiteFactor(Index k);

/// Volume of the unit k-ball with Gamma evaluated exactly at half-integers.
Interval unitBallVolume(Index k);

/// rho_k (det * prod l)^{1/k} - sum l with rho_1 = 1, rho_2 = sqrt(3).
/// Throws UnknownRhoK for k >= 3.
DirectedBound lowerBoundRho(Index k, const Integer& det, const CostVector& l);

/// (k! det prod l)^{1/k} - sum l, a strict lower bound for k >= 2.
/// Throws DimensionTooSmall for k < 2.
DirectedBound lowerBoundFactorial(Index k, const Integer& det, const CostVector& l);

/// k gamma_k^{k/2} det (sum l + |l|) / 2 - sum l.  Throws DimensionTooSmall
/// for k < 2.
DirectedBound upperBound(Index k, const Integer& det, const CostVector& l);

struct Inradius {
  std::optional<Rational> exact;  // present when |l| is rational
  Interval enclosure;
};

/// 1 / (sum l + |l|).
Inradius inradius(const CostVector& l);

Rational coveringRadius(const GroupInstance& inst, const SolverOptions& options = {});
Rational coveringRadius(const GroupInstance& inst, const GapCertificate& cert);

struct GridCoverOptions {
  std::uint64_t maxPoints = 4'000'000;
  std::size_t maxReported = 64;
};

/// Grid points p in h Z^k inside the box prod [0, H_ii) of the Hermite
/// form (a fundamental domain) with no lambda in Lambda such that
/// p - lambda >= 0 and l.(p - lambda) <= rho.  An empty result is evidence
/// of coverage at this resolution, not a proof.
struct GridCoverReport {
  Rational rho;
  Rational h;
  std::uint64_t pointsChecked = 0;
  std::uint64_t uncoveredCount = 0;
  std::vector<RatVector> uncovered;  // first maxReported points

  bool noUncoveredPointFound() const { return uncoveredCount == 0; }
};

/// k <= 3.  Throws ResolutionTooFine when the grid exceeds maxPoints.
GridCoverReport gridCoverCheck(const GroupInstance& inst, const Rational& rho,
                               const Rational& h, const GridCoverOptions& options = {});

struct BoundsReport {
  Index k = 0;
  Integer det;
  std::optional<DirectedBound> lowerRho;
  std::optional<DirectedBound> lowerFactorial;
  std::optional<DirectedBound> upper;
  Inradius inradius;
  std::optional<Rational> gap;

  /// With a gap present: every available bound brackets it (the factorial
  /// bound strictly).
  bool consistent() const;
};

BoundsReport boundsReport(const GroupInstance& inst,
                          std::optional<Rational> gap = std::nullopt);

}  // namespace latgap
