#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <string>
#include <string_view>

namespace latgap {

// Expression templates are disabled so the scalars behave as plain values
// inside Eigen expressions.
using Integer =
    boost::multiprecision::number<boost::multiprecision::gmp_int,
                                  boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using Matrix =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

// Floor division and the matching nonnegative remainder (b != 0).
Integer floorDiv(const Integer& a, const Integer& b);
Integer floorMod(const Integer& a, const Integer& b);
Integer ceilDiv(const Integer& a, const Integer& b);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

bool isPerfectSquare(const Integer& n, Integer* root = nullptr);

// Accepts "p", "-p", "p/q"; throws Error(InvalidInput) on anything else.
Rational parseRational(std::string_view text);
Integer parseInteger(std::string_view text);

// "p" when q == 1, "p/q" otherwise.
std::string toString(const Rational& q);
std::string toString(const Integer& z);

template <typename Derived>
RatVector toRational(const Eigen::MatrixBase<Derived>& v) {
  RatVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = Rational(v(i));
  return out;
}

template <typename Derived>
IntVector toInteger(const Eigen::MatrixBase<Derived>& v) {
  IntVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = Integer(v(i));
  return out;
}

}  // namespace latgap
