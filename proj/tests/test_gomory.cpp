#include "support.hpp"

#include <gtest/gtest.h>

#include <functional>

namespace latgap {
namespace {

using testing::intMatrix;
using testing::intVector;
using testing::ratVector;
using testing::Rng;

IpInstance knapsack357(long long b) {
  return IpInstance(intMatrix({{3, 5, 7}}), intVector({b}), ratVector({1, 1, 1}));
}

ErrorCode codeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no latgap::Error thrown";
  return ErrorCode::InvalidInput;
}

TEST(Simplex, SmallProblems) {
  // min -x1 - x2  s.t.  x1 + 2 x2 + s1 = 4, 3 x1 + x2 + s2 = 6.
  RatMatrix a(2, 4);
  a << 1, 2, 1, 0, 3, 1, 0, 1;
  const LpSolution sol = solveStandardForm(a, ratVector({4, 6}), ratVector({-1, -1, 0, 0}));
  EXPECT_EQ(sol.value, Rational(-14, 5));
  EXPECT_EQ(sol.x(0), Rational(8, 5));
  EXPECT_EQ(sol.x(1), Rational(6, 5));
  EXPECT_TRUE((sol.reducedCosts.array() >= Rational(0)).all());
  EXPECT_EQ(RatVector(a * sol.x), ratVector({4, 6}));

  RatMatrix u(1, 2);
  u << 1, -1;
  EXPECT_EQ(codeOf([&] { solveStandardForm(u, ratVector({0}), ratVector({-1, 0})); }),
            ErrorCode::LpUnbounded);
  RatMatrix inf(1, 2);
  inf << 2, 3;
  EXPECT_EQ(codeOf([&] { solveStandardForm(inf, ratVector({-1}), ratVector({1, 1})); }),
            ErrorCode::LpInfeasible);
  EXPECT_EQ(codeOf([&] {
              RatMatrix s(2, 2);
              s << 1, 2, 2, 4;
              solveExact(s, RatMatrix::Identity(2, 2));
            }),
            ErrorCode::SingularBasis);
}

TEST(Simplex, DegenerateCyclingExampleTerminates) {
  // Beale's example, which cycles under the textbook largest-coefficient rule.
  RatMatrix a(3, 7);
  a << Rational(1, 4), -8, -1, 9, 1, 0, 0,
       Rational(1, 2), -12, Rational(-1, 2), 3, 0, 1, 0,
       0, 0, 1, 0, 0, 0, 1;
  RatVector c(7);
  c << Rational(-3, 4), 20, Rational(-1, 2), 6, 0, 0, 0;
  const LpSolution sol = solveStandardForm(a, ratVector({0, 0, 1}), c);
  EXPECT_EQ(sol.value, Rational(-5, 4));
}

TEST(CheckPointed, Examples) {
  EXPECT_TRUE(checkPointed(intMatrix({{3, 5, 7}})));
  EXPECT_FALSE(checkPointed(intMatrix({{1, -1}})));
  EXPECT_TRUE(checkPointed(IntMatrix(IntMatrix::Identity(3, 3))));
  EXPECT_TRUE(checkPointed(intMatrix({{1, -1, 0}, {0, 1, 1}})));
  EXPECT_EQ(codeOf([] { IpInstance(intMatrix({{1, -1}}), intVector({0}), ratVector({1, 1})); }),
            ErrorCode::InvalidInput);
  EXPECT_EQ(codeOf([] { IpInstance(intMatrix({{1, 2}, {2, 4}}), intVector({0, 0}), ratVector({1, 1})); }),
            ErrorCode::RankDeficient);
}

TEST(LpSolve, Examples) {
  const LpBasisResult r = lpSolve(knapsack357(10));
  EXPECT_EQ(r.basic, (std::vector<Index>{2}));
  EXPECT_EQ(r.value, Rational(10, 7));
  EXPECT_EQ(r.reducedCosts, ratVector({Rational(4, 7), Rational(2, 7)}));
  EXPECT_TRUE(r.unique);

  const LpBasisResult zero = lpSolve(knapsack357(0));
  EXPECT_EQ(zero.value, 0);
  EXPECT_TRUE(zero.x.isZero());

  EXPECT_EQ(codeOf([] { lpSolve(IpInstance(intMatrix({{2, 3}}), intVector({-1}), ratVector({1, 1}))); }),
            ErrorCode::LpInfeasible);
}

TEST(BuildRelaxation, Examples) {
  const GroupRelaxation rel = buildRelaxation(knapsack357(10));
  EXPECT_EQ(rel.lattice.detAbs(), 7);
  EXPECT_EQ(rel.cost.values(), ratVector({Rational(4, 7), Rational(2, 7)}));
  EXPECT_EQ(rel.constant, Rational(10, 7));
  // u = (1, 0, 1) is admissible, so r is congruent to (1, 0).
  EXPECT_TRUE(isMember(rel.lattice, IntVector(rel.residue - intVector({1, 0}))));
  // Lambda(A) = {x : 3 x1 + 5 x2 = 0 mod 7}.
  for (long long x = -8; x <= 8; ++x)
    for (long long y = -8; y <= 8; ++y)
      EXPECT_EQ(isMember(rel.lattice, intVector({x, y})), (3 * x + 5 * y) % 7 == 0);

  const GroupRelaxation z = buildRelaxation(knapsack357(0));
  EXPECT_TRUE(isMember(z.lattice, z.residue));
  EXPECT_EQ(solveRelaxation(z).groupValue, 0);

  EXPECT_EQ(codeOf([] { buildRelaxation(IpInstance(intMatrix({{2, 4}}), intVector({4}), ratVector({1, 2}))); }),
            ErrorCode::NonGenericReducedCosts);
  EXPECT_EQ(codeOf([] { buildRelaxation(IpInstance(intMatrix({{2, 4}}), intVector({3}), ratVector({1, 3}))); }),
            ErrorCode::NoIntegerSolution);
  EXPECT_EQ(codeOf([] { buildRelaxation(IpInstance(intMatrix({{1}}), intVector({3}), ratVector({1}))); }),
            ErrorCode::InvalidInput);
}

TEST(SolveRelaxation, Examples) {
  const RelaxationSolution s10 = solveRelaxation(buildRelaxation(knapsack357(10)));
  EXPECT_EQ(s10.groupValue, Rational(4, 7));
  EXPECT_EQ(s10.bound, 2);
  const RelaxationSolution s9 = solveRelaxation(buildRelaxation(knapsack357(9)));
  EXPECT_EQ(s9.groupValue, Rational(12, 7));
  EXPECT_EQ(s9.bound, 3);
  EXPECT_EQ(solveRelaxation(buildRelaxation(knapsack357(0))).bound, 0);
}

TEST(IpBruteForce, Examples) {
  EXPECT_EQ(*ipBruteForce(knapsack357(10), 10), 2);
  EXPECT_FALSE(ipBruteForce(knapsack357(1), 10));
  EXPECT_FALSE(ipBruteForce(knapsack357(1), 1000));
  EXPECT_EQ(*ipBruteForce(knapsack357(0), 5), 0);
  EXPECT_EQ(*ipBruteForce(knapsack357(9), 9), 3);
  EXPECT_EQ(*ipBruteForce(knapsack357(30), 30), 6);
  EXPECT_EQ(codeOf([] { ipBruteForce(knapsack357(10), 40, BruteForceOptions{3}); }),
            ErrorCode::ResourceLimitExceeded);
}

// min c.x over A x = b, x >= 0 for d = 1 by dynamic programming over b.
std::optional<Rational> knapsackDp(const IpInstance& ip) {
  const auto b = static_cast<long long>(ip.b()(0));
  std::vector<std::optional<Rational>> best(b + 1);
  best[0] = Rational(0);
  for (long long t = 1; t <= b; ++t)
    for (Index j = 0; j < ip.cols(); ++j) {
      const auto a = static_cast<long long>(ip.A()(0, j));
      if (a <= t && best[t - a]) {
        const Rational v = *best[t - a] + ip.c()(j);
        if (!best[t] || v < *best[t]) best[t] = v;
      }
    }
  return best[b];
}

TEST(IpBruteForce, MatchesDynamicProgramming) {
  Rng rng(51);
  for (int trial = 0; trial < 25; ++trial) {
    const testing::Knapsack k = testing::randomKnapsack(rng);
    EXPECT_EQ(ipBruteForce(k.ip, k.box), knapsackDp(k.ip));
  }
}

TEST(Properties, LowerBoundAndLpOptimality) {
  Rng rng(52);
  for (int trial = 0; trial < 30; ++trial) {
    const testing::Knapsack k = testing::randomKnapsack(rng);
    const GroupRelaxation rel = buildRelaxation(k.ip);
    const RelaxationSolution sol = solveRelaxation(rel);
    const auto ip = ipBruteForce(k.ip, k.box);
    ASSERT_TRUE(ip);
    EXPECT_LE(sol.bound, *ip);
    EXPECT_GE(sol.bound, rel.lp.value);
    EXPECT_TRUE((rel.lp.reducedCosts.array() > Rational(0)).all());
    EXPECT_EQ(RatVector(k.ip.A().cast<Rational>() * rel.lp.x), toRational(k.ip.b()));
    EXPECT_TRUE((rel.lp.x.array() >= Rational(0)).all());

    // Lift x_tau = A_tau^{-1}(b - A_nb x_nb); when it is a nonnegative
    // integer the bound is attained.
    const Index tau = rel.lp.basic.front();
    Rational rest = Rational(k.ip.b()(0));
    for (std::size_t j = 0; j < rel.lp.nonbasic.size(); ++j)
      rest -= Rational(k.ip.A()(0, rel.lp.nonbasic[j]) * sol.minimizer(static_cast<Index>(j)));
    const Rational xTau = rest / Rational(k.ip.A()(0, tau));
    if (xTau >= 0 && denominator(xTau) == 1) EXPECT_EQ(sol.bound, *ip);

    // Knapsacks whose nonbasic coefficients have gcd coprime to the basic one.
    Integer g = 0;
    for (Index j : rel.lp.nonbasic) g = gcd(g, k.ip.A()(0, j));
    if (gcd(g, k.ip.A()(0, tau)) == 1) {
      EXPECT_EQ(rel.lattice.detAbs(), abs(k.ip.A()(0, tau)));
      std::vector<Integer> a;
      for (Index j : rel.lp.nonbasic) a.push_back(k.ip.A()(0, j));
      a.push_back(k.ip.A()(0, tau));
      EXPECT_EQ(hnf(lambdaA(FrobeniusInput(a)).rows()), rel.lattice.rows());
    }
  }
}

TEST(SingleRow, KnapsackCoincidesWithFullRelaxation) {
  Rng rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const testing::Knapsack k = testing::randomKnapsack(rng);
    const GroupRelaxation full = buildRelaxation(k.ip);
    const GroupRelaxation row = singleRowRelaxation(k.ip, 0);
    EXPECT_EQ(hnf(row.lattice.rows()), hnf(full.lattice.rows()));
    EXPECT_EQ(solveRelaxation(row).bound, solveRelaxation(full).bound);
  }
}

TEST(SingleRow, ChainOnTwoRowInstances) {
  Rng rng(54);
  int checked = 0;
  while (checked < 12) {
    const Index n = testing::uniform(rng, 3, 5);
    IntMatrix a(2, n);
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < n; ++j) a(i, j) = testing::uniform(rng, 1, 9);
    if (rank(a) < 2) continue;
    IntVector x0(n);
    for (Index j = 0; j < n; ++j) x0(j) = testing::uniform(rng, 0, 3);
    RatVector c(n);
    for (Index j = 0; j < n; ++j) c(j) = Rational(testing::uniform(rng, 1, 9), testing::uniform(rng, 1, 2));
    const IpInstance ip(a, IntVector(a * x0), c);
    std::optional<GroupRelaxation> full;
    try {
      full = buildRelaxation(ip);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NonGenericReducedCosts) continue;
      throw;
    }
    const Rational fullBound = solveRelaxation(*full).bound;
    const auto opt = ipBruteForce(ip, static_cast<std::uint64_t>(ip.b().maxCoeff()));
    ASSERT_TRUE(opt);
    EXPECT_LE(fullBound, *opt);
    for (Index i = 0; i < 2; ++i) EXPECT_LE(solveRelaxation(singleRowRelaxation(ip, i)).bound, fullBound);
    ++checked;
  }
}

TEST(SingleRow, IntegralRowIsTrivial) {
  // With A_tau = I every row of A_tau^{-1} A is integral: D = 1, one coset.
  const IpInstance ip(intMatrix({{1, 0, 2, 1}, {0, 1, 1, 3}}), intVector({4, 5}),
                      ratVector({1, 1, 5, 6}));
  const GroupRelaxation row = singleRowRelaxation(ip, 0);
  EXPECT_EQ(row.lattice.detAbs(), 1);
  EXPECT_EQ(solveRelaxation(row).groupValue, 0);
  EXPECT_EQ(codeOf([&] { singleRowRelaxation(ip, 2); }), ErrorCode::InvalidInput);
}

TEST(Witness, ReferenceInstance) {
  const IpInstance ip = knapsack357(10);
  const GroupRelaxation rel = buildRelaxation(ip);
  const GapCertificate cert = gap(rel.instance());
  EXPECT_EQ(cert.gap, Rational(12, 7));
  const WitnessRhs w = witnessRhs(ip, rel, cert);
  EXPECT_EQ(w.bPrime, intVector({9}));
  EXPECT_EQ(w.predicted, 3);
  EXPECT_EQ(*ipBruteForce(ip.withRhs(w.bPrime), 9), 3);

  // The other maximizer (0, 6) of the same coset value.
  GapCertificate other = cert;
  other.witnessX = intVector({0, 6});
  EXPECT_EQ(rel.cost.dot(other.witnessX), cert.gap);
  const WitnessRhs w2 = witnessRhs(ip, rel, other);
  EXPECT_EQ(w2.bPrime, intVector({30}));
  EXPECT_EQ(w2.predicted, 6);
  EXPECT_EQ(*ipBruteForce(ip.withRhs(w2.bPrime), 30), 6);

  EXPECT_THROW(witnessRhs(IpInstance(intMatrix({{1, 0, 2}, {0, 1, 1}}), intVector({1, 1}),
                                     ratVector({1, 1, 5})),
                          rel, cert),
               Error);
}

TEST(Witness, ZeroGapFamily) {
  // Lambda(A) = Z^k when the basic coefficient is 1.
  const IpInstance ip(intMatrix({{1, 3, 4}}), intVector({0}), ratVector({1, 4, 5}));
  const GroupRelaxation rel = buildRelaxation(ip);
  const GapCertificate cert = gap(rel.instance());
  EXPECT_EQ(cert.gap, 0);
  const WitnessRhs w = witnessRhs(ip, rel, cert);
  EXPECT_EQ(w.bPrime, intVector({0}));
  EXPECT_EQ(w.predicted, 0);
}

TEST(Witness, PredictionMatchesBruteForce) {
  Rng rng(55);
  for (int trial = 0; trial < 15; ++trial) {
    const testing::Knapsack k = testing::randomKnapsack(rng);
    const GroupRelaxation rel = buildRelaxation(k.ip);
    const WitnessRhs w = witnessRhs(k.ip, rel, gap(rel.instance()));
    const auto box = static_cast<std::uint64_t>(w.bPrime(0));
    EXPECT_EQ(*ipBruteForce(k.ip.withRhs(w.bPrime), box), w.predicted);
  }
}

}  // namespace
}  // namespace latgap
