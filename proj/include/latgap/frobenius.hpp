#pragma once

// Frobenius numbers through the lattice programming gap:
//   frob(a) = gap(Lambda_a, l_a) - a_mod,
// where a_mod is the entry playing the modulus role, l_a the remaining
// entries and Lambda_a = { x in Z^k : l_a . x = 0 (mod a_mod) }.

#include "latgap/groupsolve.hpp"

#include <vector>

namespace latgap {

/// k + 1 >= 2 positive integers with gcd 1.
class FrobeniusInput {
 public:
  /// Throws InvalidInput (fewer than two entries or a nonpositive entry) or
  /// NotPrimitive (gcd > 1).
  explicit FrobeniusInput(std::vector<Integer> a);

  const std::vector<Integer>& values() const { return a_; }
  std::size_t size() const { return a_.size(); }

 private:
  std::vector<Integer> a_;
};

/// Lambda_a with the LAST entry as modulus; det(Lambda_a) = a_{k+1}.
LatticeBasis lambdaA(const FrobeniusInput& a);

enum class ModulusRole {
  Smallest,  // fewest cosets; frob is symmetric in the entries
  Last,      // a_{k+1}, the orientation of the reduction as usually stated
};

struct FrobeniusReduction {
  Integer frobenius;
  Integer modulus;
  std::size_t modulusIndex = 0;
  GroupInstance instance;
  GapCertificate certificate;
};

FrobeniusReduction frobeniusReduction(const FrobeniusInput& a, ModulusRole role,
                                      const SolverOptions& options = {});

/// Largest integer that is not a nonnegative integer combination of the
/// entries; -1 when an entry equals 1.
Integer frobeniusNumber(const FrobeniusInput& a, const SolverOptions& options = {});

/// Representability table over [0, a_min * a_max), independent of the
/// lattice route.  Throws ResourceLimitExceeded above `maxTable` entries.
Integer oracleFrobenius(const FrobeniusInput& a, std::uint64_t maxTable = 200'000'000);

}  // namespace latgap
