#pragma once

// Group problems  min { l.x : x = r (mod Lambda), x >= 0 }  and the lattice
// programming gap, solved as shortest paths in the quotient lattice digraph
// on Z^k / Lambda (vertex c has the k out-edges c -> c + e_j of cost l_j).

#include "latgap/intlat.hpp"

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace latgap {

/// Positive rational costs together with their integer scaling
/// weights = costs * denominator, denominator = lcm of the denominators.
class CostVector {
 public:
  explicit CostVector(RatVector costs);

  template <typename Derived>
  static CostVector fromValues(const Eigen::MatrixBase<Derived>& costs) {
    return CostVector(toRational(costs));
  }

  Index size() const { return costs_.size(); }
  const RatVector& values() const { return costs_; }
  const IntVector& weights() const { return weights_; }
  const Integer& denominator() const { return denominator_; }

  Rational sum() const;
  Rational dot(const IntVector& x) const;

 private:
  RatVector costs_;
  IntVector weights_;
  Integer denominator_;
};

struct SolverOptions {
  /// Resource guard on |Z^k / Lambda|; computing the gap is NP-hard once k
  /// is part of the input, so large instances are refused explicitly.
  std::uint64_t maxCosets = 10'000'000;
};

class GroupInstance {
 public:
  GroupInstance(LatticeBasis basis, CostVector cost);

  Index dim() const { return basis_.dim(); }
  const LatticeBasis& basis() const { return basis_; }
  const CostVector& cost() const { return cost_; }
  const SnfDecomposition& snf() const { return snf_; }
  const Integer& cosetCount() const { return snf_.order; }

 private:
  LatticeBasis basis_;
  CostVector cost_;
  SnfDecomposition snf_;
};

struct GroupSolution {
  Rational value;
  IntVector minimizer;
  CosetLabel residueLabel;
};

struct GapCertificate {
  Rational gap;
  CosetLabel witnessLabel;
  IntVector witnessX;
  Integer cosetCount;
};

enum class DistanceWidth { Int64, Int128, Big };

/// Exact shortest-path distances from the zero coset to every coset.
///
/// Distances are kept in integer-scaled form (in units of 1 / denominator)
/// in the narrowest of int64, checked int128 or arbitrary precision that
/// can hold them.  Predecessors are not stored: the minimizer of a coset is
/// rebuilt from the distances, stepping back along the smallest edge index
/// j with dist(c - e_j) + w_j == dist(c).
class CosetDistances {
 public:
  std::uint64_t size() const { return cosets_; }
  Index dim() const { return dim_; }
  DistanceWidth width() const;

  Integer scaledDistance(std::uint64_t index) const;
  Rational distance(std::uint64_t index) const;
  /// Smallest index attaining the maximum distance.
  std::uint64_t argmax() const;
  IntVector minimizer(std::uint64_t index) const;

  /// Upper bound on the bytes held by the solver at its peak.
  std::size_t peakWorkingSetBytes() const { return peak_bytes_; }

 private:
  friend CosetDistances solveAll(const GroupInstance&, const SolverOptions&);

  template <typename Dist>
  bool relaxAll();

  std::uint64_t predecessor(std::uint64_t index, Index j) const;

  Index dim_ = 0;
  std::uint64_t cosets_ = 0;
  Integer denominator_;
  std::vector<std::uint64_t> radices_;   // invariants > 1 only
  std::vector<std::uint64_t> strides_;
  std::vector<std::vector<std::uint64_t>> increments_;  // [edge][component]
  std::vector<Integer> weights_;
  std::variant<std::vector<std::int64_t>, std::vector<__int128>,
               std::vector<Integer>>
      dist_;
  std::size_t peak_bytes_ = 0;
};

/// Single-source shortest paths from the zero coset.  Throws
/// CosetLimitExceeded when the coset count exceeds options.maxCosets.
CosetDistances solveAll(const GroupInstance& inst,
                        const SolverOptions& options = {});

/// m(Lambda, l, r) with a minimizer.
GroupSolution minimize(const GroupInstance& inst, const IntVector& r,
                       const SolverOptions& options = {});
GroupSolution minimize(const GroupInstance& inst, const CosetDistances& dist,
                       const IntVector& r);

/// gap(Lambda, l) = max_r m(Lambda, l, r), witness = smallest linear index.
GapCertificate gap(const GroupInstance& inst, const SolverOptions& options = {});
GapCertificate gap(const GroupInstance& inst, const CosetDistances& dist);

/// Brute-force reference for m(Lambda, l, r).
///
/// Scans x in [0, box]^k (box defaults to N - 1, which always contains a
/// minimizer: a shortest path on N vertices has at most N - 1 edges) in
/// order of increasing cost and returns the first x with x - r in Lambda.
/// Uses only Hermite-form membership, never the Smith labels.
class BruteForceOracle {
 public:
  struct Options {
    std::uint64_t maxCosets = 10'000;
    std::uint64_t maxPoints = 2'000'000;
    std::optional<std::uint64_t> box;
  };

  explicit BruteForceOracle(const GroupInstance& inst);
  BruteForceOracle(const GroupInstance& inst, const Options& options);

  /// nullopt when no point of the box lies in r + Lambda.
  std::optional<Rational> minimum(const IntVector& r) const;
  /// max over the coset representatives prod [0, H_ii) of the Hermite form.
  Rational gap() const;

 private:
  GroupInstance inst_;
  MembershipTest membership_;
  std::uint64_t box_ = 0;
  std::vector<std::int64_t> coords_;  // point p occupies [p * k, p * k + k)
  std::vector<Integer> costs_;        // scaled cost of each point
  std::vector<std::uint32_t> order_;  // by cost, then enumeration order
};

std::optional<Rational> oracleMinimum(const GroupInstance& inst,
                                      const IntVector& r,
                                      const BruteForceOracle::Options& options = {});

}  // namespace latgap
