#include "latgap/groupsolve.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

namespace latgap {

namespace {

using Int128 = __int128;

constexpr Int128 kInt128Max =
    static_cast<Int128>((static_cast<unsigned __int128>(1) << 127) - 1);

Integer fromInt128(Int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-v)
                                 : static_cast<unsigned __int128>(v);
  Integer out = Integer(static_cast<std::uint64_t>(u >> 64));
  out <<= 64;
  out += Integer(static_cast<std::uint64_t>(u));
  return negative ? Integer(-out) : out;
}

Int128 toInt128(const Integer& v) {
  // Callers guarantee 0 <= v <= kInt128Max.
  const Integer mask = (Integer(1) << 64) - 1;
  const auto lo = static_cast<std::uint64_t>(v & mask);
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  return static_cast<Int128>((static_cast<unsigned __int128>(hi) << 64) | lo);
}

template <typename Dist>
Dist fromInteger(const Integer& v) {
  if constexpr (std::is_same_v<Dist, Integer>) {
    return v;
  } else if constexpr (std::is_same_v<Dist, Int128>) {
    return toInt128(v);
  } else {
    return static_cast<std::int64_t>(v);
  }
}

template <typename Dist>
Integer toInteger(const Dist& v) {
  if constexpr (std::is_same_v<Dist, Integer>) {
    return v;
  } else if constexpr (std::is_same_v<Dist, Int128>) {
    return fromInt128(v);
  } else {
    return Integer(v);
  }
}

template <typename Dist>
bool checkedAdd(const Dist& a, const Dist& b, Dist& out) {
  if constexpr (std::is_same_v<Dist, Integer>) {
    out = a + b;
    return true;
  } else {
    return !__builtin_add_overflow(a, b, &out);
  }
}

// Indexed binary min-heap over vertex ids keyed by an external array.
template <typename Dist>
class VertexHeap {
 public:
  static constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();
  static constexpr std::uint32_t kSettled = kAbsent - 1;

  VertexHeap(std::uint64_t n, const std::vector<Dist>& key)
      : key_(key), pos_(n, kAbsent) {
    heap_.reserve(std::min<std::uint64_t>(n, 1u << 20));
  }

  bool empty() const { return heap_.empty(); }
  bool settled(std::uint32_t v) const { return pos_[v] == kSettled; }

  void pushOrDecrease(std::uint32_t v) {
    if (pos_[v] == kAbsent) {
      pos_[v] = static_cast<std::uint32_t>(heap_.size());
      heap_.push_back(v);
    }
    siftUp(pos_[v]);
  }

  std::uint32_t pop() {
    const std::uint32_t top = heap_.front();
    const std::uint32_t last = heap_.back();
    heap_.pop_back();
    pos_[top] = kSettled;
    if (!heap_.empty()) {
      heap_[0] = last;
      pos_[last] = 0;
      siftDown(0);
    }
    return top;
  }

  std::size_t capacityBytes() const {
    return pos_.capacity() * sizeof(std::uint32_t) +
           heap_.capacity() * sizeof(std::uint32_t);
  }

 private:
  bool less(std::uint32_t a, std::uint32_t b) const {
    // Equal keys pop in index order so runs are reproducible.
    return key_[a] < key_[b] || (key_[a] == key_[b] && a < b);
  }

  void siftUp(std::uint32_t i) {
    const std::uint32_t v = heap_[i];
    while (i > 0) {
      const std::uint32_t parent = (i - 1) / 2;
      if (!less(v, heap_[parent])) break;
      heap_[i] = heap_[parent];
      pos_[heap_[i]] = i;
      i = parent;
    }
    heap_[i] = v;
    pos_[v] = i;
  }

  void siftDown(std::uint32_t i) {
    const std::uint32_t v = heap_[i];
    const auto n = static_cast<std::uint32_t>(heap_.size());
    for (;;) {
      std::uint32_t child = 2 * i + 1;
      if (child >= n) break;
      if (child + 1 < n && less(heap_[child + 1], heap_[child])) ++child;
      if (!less(heap_[child], v)) break;
      heap_[i] = heap_[child];
      pos_[heap_[i]] = i;
      i = child;
    }
    heap_[i] = v;
    pos_[v] = i;
  }

  const std::vector<Dist>& key_;
  std::vector<std::uint32_t> pos_;
  std::vector<std::uint32_t> heap_;
};

std::uint64_t toIndex(const Integer& z) { return static_cast<std::uint64_t>(z); }

}  // namespace

CostVector::CostVector(RatVector costs) : costs_(std::move(costs)) {
  if (costs_.size() == 0)
    throw Error(ErrorCode::InvalidInput, "cost vector is empty");
  denominator_ = 1;
  for (Index i = 0; i < costs_.size(); ++i) {
    if (costs_(i) <= 0)
      throw Error(ErrorCode::InvalidInput, "costs must be strictly positive");
    denominator_ = lcm(denominator_, boost::multiprecision::denominator(costs_(i)));
  }
  weights_.resize(costs_.size());
  for (Index i = 0; i < costs_.size(); ++i)
    weights_(i) = boost::multiprecision::numerator(costs_(i)) *
                  (denominator_ / boost::multiprecision::denominator(costs_(i)));
}

Rational CostVector::sum() const {
  Rational s = 0;
  for (Index i = 0; i < costs_.size(); ++i) s += costs_(i);
  return s;
}

Rational CostVector::dot(const IntVector& x) const {
  if (x.size() != costs_.size())
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from cost length");
  Integer s = 0;
  for (Index i = 0; i < x.size(); ++i) s += weights_(i) * x(i);
  return Rational(s, denominator_);
}

GroupInstance::GroupInstance(LatticeBasis basis, CostVector cost)
    : basis_(std::move(basis)), cost_(std::move(cost)), snf_(latgap::snf(basis_)) {
  if (cost_.size() != basis_.dim())
    throw Error(ErrorCode::DimensionMismatch, "cost length differs from lattice dimension");
}

DistanceWidth CosetDistances::width() const {
  switch (dist_.index()) {
    case 0: return DistanceWidth::Int64;
    case 1: return DistanceWidth::Int128;
    default: return DistanceWidth::Big;
  }
}

Integer CosetDistances::scaledDistance(std::uint64_t index) const {
  return std::visit([&](const auto& d) { return toInteger(d.at(index)); }, dist_);
}

Rational CosetDistances::distance(std::uint64_t index) const {
  return Rational(scaledDistance(index), denominator_);
}

std::uint64_t CosetDistances::argmax() const {
  return std::visit(
      [](const auto& d) {
        // max_element keeps the first maximum.
        return static_cast<std::uint64_t>(std::max_element(d.begin(), d.end()) - d.begin());
      },
      dist_);
}

std::uint64_t CosetDistances::predecessor(std::uint64_t index, Index j) const {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < radices_.size(); ++i) {
    const std::uint64_t digit = (index / strides_[i]) % radices_[i];
    const std::uint64_t step = increments_[j][i];
    out += ((digit + radices_[i] - step) % radices_[i]) * strides_[i];
  }
  return out;
}

IntVector CosetDistances::minimizer(std::uint64_t index) const {
  if (index >= cosets_) throw Error(ErrorCode::InvalidInput, "coset index out of range");
  IntVector x = IntVector::Zero(dim_);
  std::visit(
      [&](const auto& d) {
        using Dist = typename std::decay_t<decltype(d)>::value_type;
        std::vector<Dist> w;
        for (const auto& wj : weights_) w.push_back(fromInteger<Dist>(wj));
        std::uint64_t c = index;
        while (d[c] != 0) {
          Index j = 0;
          for (; j < dim_; ++j) {
            const std::uint64_t p = predecessor(c, j);
            Dist via;
            if (d[p] >= 0 && checkedAdd(d[p], w[j], via) && via == d[c]) {
              c = p;
              break;
            }
          }
          if (j == dim_)
            throw Error(ErrorCode::InvalidInput, "inconsistent distance table");
          x(j) += 1;
        }
      },
      dist_);
  return x;
}

template <typename Dist>
bool CosetDistances::relaxAll() {
  const std::uint64_t n = cosets_;
  const auto k = static_cast<std::size_t>(dim_);
  const std::size_t comps = radices_.size();

  std::vector<Dist> w(k);
  for (std::size_t j = 0; j < k; ++j) w[j] = fromInteger<Dist>(weights_[j]);
  // delta_j = sum_i inc_ji * stride_i, wrapped per component below.
  std::vector<std::uint64_t> delta(k, 0);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < comps; ++i) delta[j] += increments_[j][i] * strides_[i];

  std::vector<Dist> dist(n, Dist(-1));
  VertexHeap<Dist> heap(n, dist);
  std::vector<std::uint64_t> digits(comps);
  dist[0] = 0;
  heap.pushOrDecrease(0);
  std::size_t heapBytes = heap.capacityBytes();
  while (!heap.empty()) {
    const std::uint32_t v = heap.pop();
    const Dist base = dist[v];
    for (std::size_t i = 0; i < comps; ++i) digits[i] = (v / strides_[i]) % radices_[i];
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t nb = v + delta[j];
      for (std::size_t i = 0; i < comps; ++i)
        if (digits[i] + increments_[j][i] >= radices_[i]) nb -= radices_[i] * strides_[i];
      const auto u = static_cast<std::uint32_t>(nb);
      if (heap.settled(u)) continue;
      Dist cand;
      if (!checkedAdd(base, w[j], cand)) return false;
      if (dist[u] < 0 || cand < dist[u]) {
        dist[u] = std::move(cand);
        heap.pushOrDecrease(u);
      }
    }
    heapBytes = std::max(heapBytes, heap.capacityBytes());
  }
  peak_bytes_ = dist.capacity() * sizeof(Dist) + heapBytes;
  dist_ = std::move(dist);
  return true;
}

CosetDistances solveAll(const GroupInstance& inst, const SolverOptions& options) {
  const Integer& order = inst.cosetCount();
  constexpr std::uint64_t kIndexCeiling = std::numeric_limits<std::uint32_t>::max() - 2;
  if (order > Integer(options.maxCosets) || order > Integer(kIndexCeiling))
    throw Error(ErrorCode::CosetLimitExceeded,
                "group has " + order.str() + " cosets, limit is " +
                    std::to_string(std::min(options.maxCosets, kIndexCeiling)));

  const SnfDecomposition& s = inst.snf();
  const Index k = inst.dim();
  CosetDistances out;
  out.dim_ = k;
  out.cosets_ = toIndex(order);
  out.denominator_ = inst.cost().denominator();
  std::uint64_t stride = 1;
  std::vector<Index> effective;
  for (Index i = 0; i < s.dim(); ++i) {
    if (s.invariants(i) == 1) continue;
    effective.push_back(i);
    out.radices_.push_back(toIndex(s.invariants(i)));
    out.strides_.push_back(stride);
    stride *= out.radices_.back();
  }
  // Label increment of e_j is (e_j V) mod d, i.e. row j of V reduced.
  out.increments_.assign(k, std::vector<std::uint64_t>(effective.size()));
  for (Index j = 0; j < k; ++j)
    for (std::size_t c = 0; c < effective.size(); ++c) {
      const Index i = effective[c];
      out.increments_[j][c] = toIndex(floorMod(s.V(j, i), s.invariants(i)));
    }
  Integer maxWeight = 0;
  for (Index j = 0; j < k; ++j) {
    out.weights_.push_back(inst.cost().weights()(j));
    maxWeight = std::max(maxWeight, inst.cost().weights()(j));
  }

  // Distances never exceed (N - 1) * max weight.
  const Integer bound = (order - 1) * maxWeight;
  if (bound <= Integer(std::numeric_limits<std::int64_t>::max()) &&
      out.relaxAll<std::int64_t>())
    return out;
  if (bound <= fromInt128(kInt128Max) && out.relaxAll<Int128>()) return out;
  out.relaxAll<Integer>();
  return out;
}

GroupSolution minimize(const GroupInstance& inst, const CosetDistances& dist,
                       const IntVector& r) {
  if (r.size() != inst.dim())
    throw Error(ErrorCode::DimensionMismatch, "residue length differs from lattice dimension");
  GroupSolution sol;
  sol.residueLabel = cosetLabel(inst.snf(), r);
  const std::uint64_t index = toIndex(sol.residueLabel.index);
  sol.value = dist.distance(index);
  sol.minimizer = dist.minimizer(index);
  return sol;
}

GroupSolution minimize(const GroupInstance& inst, const IntVector& r,
                       const SolverOptions& options) {
  if (r.size() != inst.dim())
    throw Error(ErrorCode::DimensionMismatch, "residue length differs from lattice dimension");
  return minimize(inst, solveAll(inst, options), r);
}

GapCertificate gap(const GroupInstance& inst, const CosetDistances& dist) {
  GapCertificate cert;
  const std::uint64_t index = dist.argmax();
  cert.gap = dist.distance(index);
  cert.witnessLabel = labelFromIndex(inst.snf(), Integer(index));
  cert.witnessX = dist.minimizer(index);
  cert.cosetCount = inst.cosetCount();
  return cert;
}

GapCertificate gap(const GroupInstance& inst, const SolverOptions& options) {
  return gap(inst, solveAll(inst, options));
}

BruteForceOracle::BruteForceOracle(const GroupInstance& inst)
    : BruteForceOracle(inst, Options{}) {}

BruteForceOracle::BruteForceOracle(const GroupInstance& inst, const Options& options)
    : inst_(inst), membership_(inst.basis()) {
  const Integer& order = inst.cosetCount();
  if (order > Integer(options.maxCosets))
    throw Error(ErrorCode::CosetLimitExceeded,
                "oracle refuses " + order.str() + " cosets (limit " +
                    std::to_string(options.maxCosets) + ")");
  box_ = options.box.value_or(toIndex(order) - 1);
  const auto k = static_cast<std::size_t>(inst.dim());
  Integer count = 1;
  for (std::size_t i = 0; i < k; ++i) count *= Integer(box_) + 1;
  if (count > Integer(options.maxPoints) ||
      count > Integer(std::numeric_limits<std::uint32_t>::max()))
    throw Error(ErrorCode::ResourceLimitExceeded,
                "oracle box holds " + count.str() + " points (limit " +
                    std::to_string(options.maxPoints) + ")");
  const auto points = static_cast<std::uint64_t>(count);

  coords_.resize(points * k);
  costs_.resize(points);
  std::vector<std::int64_t> x(k, 0);
  const IntVector& w = inst.cost().weights();
  for (std::uint64_t p = 0; p < points; ++p) {
    Integer cost = 0;
    for (std::size_t i = 0; i < k; ++i) {
      coords_[p * k + i] = x[i];
      cost += w(static_cast<Index>(i)) * x[i];
    }
    costs_[p] = std::move(cost);
    for (std::size_t i = k; i-- > 0;) {
      if (++x[i] <= static_cast<std::int64_t>(box_)) break;
      x[i] = 0;
    }
  }
  order_.resize(points);
  std::iota(order_.begin(), order_.end(), 0u);
  std::stable_sort(order_.begin(), order_.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return costs_[a] < costs_[b]; });
}

std::optional<Rational> BruteForceOracle::minimum(const IntVector& r) const {
  const Index k = inst_.dim();
  if (r.size() != k)
    throw Error(ErrorCode::DimensionMismatch, "residue length differs from lattice dimension");
  IntVector diff(k);
  for (const std::uint32_t p : order_) {
    for (Index i = 0; i < k; ++i) diff(i) = Integer(coords_[p * k + i]) - r(i);
    if (membership_.contains(diff))
      return Rational(costs_[p], inst_.cost().denominator());
  }
  return std::nullopt;
}

Rational BruteForceOracle::gap() const {
  const IntMatrix& h = membership_.hermite();
  const Index k = inst_.dim();
  IntVector rep = IntVector::Zero(k);
  Rational best = 0;
  for (;;) {
    const auto m = minimum(rep);
    if (!m)
      throw Error(ErrorCode::InvalidInput, "oracle box too small to contain a minimizer");
    best = std::max(best, *m);
    Index i = k - 1;
    for (; i >= 0; --i) {
      rep(i) += 1;
      if (rep(i) < h(i, i)) break;
      rep(i) = 0;
    }
    if (i < 0) break;
  }
  return best;
}

std::optional<Rational> oracleMinimum(const GroupInstance& inst, const IntVector& r,
                                      const BruteForceOracle::Options& options) {
  return BruteForceOracle(inst, options).minimum(r);
}

}  // namespace latgap
