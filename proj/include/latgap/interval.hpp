#pragma once

// Closed real intervals with outward rounding, backed by MPFR.  Every
// operation returns an enclosure of the exact result, so comparisons of an
// endpoint against an exact rational are certified.

#include "latgap/scalar.hpp"

#include <mpfr.h>

namespace latgap {

class BigFloat {
 public:
  static constexpr mpfr_prec_t kPrecision = 160;

  BigFloat();
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(BigFloat other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  double toDouble(mpfr_rnd_t rnd) const { return mpfr_get_d(value_, rnd); }
  int compare(const Rational& q) const;

 private:
  mpfr_t value_;
};

class Interval {
 public:
  Interval() = default;
  explicit Interval(const Rational& exact);
  explicit Interval(const Integer& exact) : Interval(Rational(exact)) {}

  static Interval pi();

  /// Lower endpoint rounded to double toward -infinity.
  double lower() const { return lo_.toDouble(MPFR_RNDD); }
  /// Upper endpoint rounded to double toward +infinity.
  double upper() const { return hi_.toDouble(MPFR_RNDU); }

  bool contains(const Rational& q) const {
    return lo_.compare(q) <= 0 && hi_.compare(q) >= 0;
  }

  // Endpoint tests against an exact value.
  bool lowerAtMost(const Rational& q) const { return lo_.compare(q) <= 0; }
  bool lowerBelow(const Rational& q) const { return lo_.compare(q) < 0; }
  bool upperAtLeast(const Rational& q) const { return hi_.compare(q) >= 0; }
  bool upperBelow(const Rational& q) const { return hi_.compare(q) < 0; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);

  friend Interval sqrt(const Interval& a);
  /// k-th root of a nonnegative interval.
  friend Interval root(const Interval& a, unsigned long k);
  friend Interval pow(const Interval& a, unsigned long e);

 private:
  BigFloat lo_;
  BigFloat hi_;
};

}  // namespace latgap
