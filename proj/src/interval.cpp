#include "latgap/interval.hpp"

#include "latgap/error.hpp"

#include <algorithm>
#include <utility>

namespace latgap {

BigFloat::BigFloat() { mpfr_init2(value_, kPrecision); mpfr_set_zero(value_, 1); }

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, kPrecision);
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : BigFloat(static_cast<const BigFloat&>(other)) {}

BigFloat& BigFloat::operator=(BigFloat other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

int BigFloat::compare(const Rational& q) const {
  return mpfr_cmp_q(value_, q.backend().data());
}

Interval::Interval(const Rational& exact) {
  mpfr_set_q(lo_.get(), exact.backend().data(), MPFR_RNDD);
  mpfr_set_q(hi_.get(), exact.backend().data(), MPFR_RNDU);
}

Interval Interval::pi() {
  Interval out;
  mpfr_const_pi(out.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(out.hi_.get(), MPFR_RNDU);
  return out;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval out;
  mpfr_add(out.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(out.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval out;
  mpfr_sub(out.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(out.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return out;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval out;
  BigFloat t;
  const mpfr_srcptr as[2] = {a.lo_.get(), a.hi_.get()};
  const mpfr_srcptr bs[2] = {b.lo_.get(), b.hi_.get()};
  bool first = true;
  for (auto x : as)
    for (auto y : bs) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), out.lo_.get())) mpfr_set(out.lo_.get(), t.get(), MPFR_RNDN);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), out.hi_.get())) mpfr_set(out.hi_.get(), t.get(), MPFR_RNDN);
      first = false;
    }
  return out;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo_.get()) <= 0 && mpfr_sgn(b.hi_.get()) >= 0)
    throw Error(ErrorCode::InvalidInput, "interval division by an interval containing zero");
  Interval inv;
  mpfr_ui_div(inv.lo_.get(), 1, b.hi_.get(), MPFR_RNDD);
  mpfr_ui_div(inv.hi_.get(), 1, b.lo_.get(), MPFR_RNDU);
  return a * inv;
}

Interval sqrt(const Interval& a) {
  if (mpfr_sgn(a.lo_.get()) < 0)
    throw Error(ErrorCode::InvalidInput, "square root of a negative interval");
  Interval out;
  mpfr_sqrt(out.lo_.get(), a.lo_.get(), MPFR_RNDD);
  mpfr_sqrt(out.hi_.get(), a.hi_.get(), MPFR_RNDU);
  return out;
}

Interval root(const Interval& a, unsigned long k) {
  if (mpfr_sgn(a.lo_.get()) < 0)
    throw Error(ErrorCode::InvalidInput, "root of a negative interval");
  Interval out;
  mpfr_rootn_ui(out.lo_.get(), a.lo_.get(), k, MPFR_RNDD);
  mpfr_rootn_ui(out.hi_.get(), a.hi_.get(), k, MPFR_RNDU);
  return out;
}

Interval pow(const Interval& a, unsigned long e) {
  Interval out(Rational(1));
  for (unsigned long i = 0; i < e; ++i) out = out * a;
  return out;
}

}  // namespace latgap
