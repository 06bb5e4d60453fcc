#include "latgap/frobenius.hpp"

#include <algorithm>
#include <utility>

namespace latgap {

FrobeniusInput::FrobeniusInput(std::vector<Integer> a) : a_(std::move(a)) {
  if (a_.size() < 2)
    throw Error(ErrorCode::InvalidInput, "need at least two entries");
  Integer g = 0;
  for (const Integer& ai : a_) {
    if (ai < 1) throw Error(ErrorCode::InvalidInput, "entries must be positive");
    g = gcd(g, ai);
  }
  if (g != 1) throw Error(ErrorCode::NotPrimitive, "gcd of entries is " + g.str());
}

namespace {

LatticeBasis lambdaWithModulus(const std::vector<Integer>& a, std::size_t mod) {
  const Index k = static_cast<Index>(a.size()) - 1;
  IntMatrix row(1, k + 1);
  Index col = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (i != mod) row(0, col++) = a[i];
  row(0, k) = a[mod];
  // Stack modulus * e_i with the projected kernel of (l_a, a_mod); the
  // projection drops the last coordinate.
  IntMatrix gens(2 * k, k);
  gens.topRows(k) = IntMatrix::Identity(k, k) * a[mod];
  gens.bottomRows(k) = kernelLattice(row).leftCols(k);
  return LatticeBasis(hnf(hnfOfGenerators(gens)));
}

}  // namespace

LatticeBasis lambdaA(const FrobeniusInput& a) {
  return lambdaWithModulus(a.values(), a.size() - 1);
}

FrobeniusReduction frobeniusReduction(const FrobeniusInput& a, ModulusRole role,
                                      const SolverOptions& options) {
  const auto& v = a.values();
  std::size_t mod = v.size() - 1;
  if (role == ModulusRole::Smallest)
    mod = static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
  RatVector costs(static_cast<Index>(v.size()) - 1);
  Index col = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != mod) costs(col++) = Rational(v[i]);
  GroupInstance inst(lambdaWithModulus(v, mod), CostVector(std::move(costs)));
  GapCertificate cert = gap(inst, options);
  // The gap is an integer here: all costs are integers.
  Integer frob = numerator(cert.gap) - v[mod];
  return FrobeniusReduction{std::move(frob), v[mod], mod, std::move(inst), std::move(cert)};
}

Integer frobeniusNumber(const FrobeniusInput& a, const SolverOptions& options) {
  return frobeniusReduction(a, ModulusRole::Smallest, options).frobenius;
}

Integer oracleFrobenius(const FrobeniusInput& a, std::uint64_t maxTable) {
  const auto& v = a.values();
  const Integer lo = *std::min_element(v.begin(), v.end());
  const Integer hi = *std::max_element(v.begin(), v.end());
  if (lo == 1) return -1;
  const Integer span = lo * hi;
  if (span > Integer(maxTable))
    throw Error(ErrorCode::ResourceLimitExceeded,
                "representability table of size " + span.str() + " exceeds limit");
  const auto n = static_cast<std::size_t>(span);
  std::vector<std::size_t> steps;
  for (const Integer& ai : v) steps.push_back(static_cast<std::size_t>(ai));
  std::vector<char> representable(n, 0);
  representable[0] = 1;
  Integer largest = -1;
  for (std::size_t t = 1; t < n; ++t) {
    for (const std::size_t s : steps) {
      if (t >= s && representable[t - s]) {
        representable[t] = 1;
        break;
      }
    }
    if (!representable[t]) largest = Integer(t);
  }
  return largest;
}

}  // namespace latgap
