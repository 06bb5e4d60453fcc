#include "latgap/error.hpp"
#include "latgap/scalar.hpp"

#include <gmp.h>

#include <cctype>

namespace latgap {

std::string_view errorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::SingularBasis: return "SingularBasis";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::UnknownRhoK: return "UnknownRhoK";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::LpInfeasible: return "LpInfeasible";
    case ErrorCode::LpUnbounded: return "LpUnbounded";
    case ErrorCode::NonGenericReducedCosts: return "NonGenericReducedCosts";
    case ErrorCode::NoIntegerSolution: return "NoIntegerSolution";
    case ErrorCode::CosetLimitExceeded: return "CosetLimitExceeded";
    case ErrorCode::ResolutionTooFine: return "ResolutionTooFine";
    case ErrorCode::ResourceLimitExceeded: return "ResourceLimitExceeded";
  }
  return "Unknown";
}

Integer floorDiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.backend().data(), a.backend().data(), b.backend().data());
  return q;
}

Integer floorMod(const Integer& a, const Integer& b) {
  Integer r = a - floorDiv(a, b) * b;
  if (r < 0) r += abs(b);
  return r;
}

Integer ceilDiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.backend().data(), a.backend().data(), b.backend().data());
  return q;
}

Integer floor(const Rational& q) {
  return floorDiv(numerator(q), denominator(q));
}

Integer ceil(const Rational& q) {
  return ceilDiv(numerator(q), denominator(q));
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

bool isPerfectSquare(const Integer& n, Integer* root) {
  if (n < 0) return false;
  Integer s = boost::multiprecision::sqrt(n);
  if (s * s != n) return false;
  if (root) *root = s;
  return true;
}

namespace {

bool isIntegerLiteral(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Integer parseInteger(std::string_view text) {
  if (!isIntegerLiteral(text))
    throw Error(ErrorCode::InvalidInput,
                "not an integer: '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text));
}

Rational parseRational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parseInteger(text));
  const Integer p = parseInteger(text.substr(0, slash));
  const std::string_view den = text.substr(slash + 1);
  if (!den.empty() && (den.front() == '-' || den.front() == '+'))
    throw Error(ErrorCode::InvalidInput,
                "signed denominator: '" + std::string(text) + "'");
  const Integer q = parseInteger(den);
  if (q == 0)
    throw Error(ErrorCode::InvalidInput,
                "zero denominator: '" + std::string(text) + "'");
  return Rational(p, q);
}

std::string toString(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string toString(const Integer& z) { return z.str(); }

}  // namespace latgap
