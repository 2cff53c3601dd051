#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

#include "bmlab/exact/poly.hpp"

namespace bmlab::mpnum {

struct Precision {
  long bits = 256;
  Precision() = default;
  explicit Precision(long b) : bits(b) {}
  Precision operator+(long extra) const { return Precision(bits + extra); }
  friend bool operator==(Precision a, Precision b) { return a.bits == b.bits; }
  /// Decimal digits carried by this many bits.
  long digits() const;
};

/// MPFR value with an explicit precision. Arithmetic results carry the larger
/// operand precision and are rounded to nearest.
class BigFloat {
 public:
  explicit BigFloat(Precision p = Precision());
  BigFloat(long v, Precision p);
  BigFloat(double v, Precision p);
  BigFloat(const std::string& decimal, Precision p);
  BigFloat(const exact::BigRational& q, Precision p);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  /// Same value, rounded to a new precision.
  BigFloat at(Precision p) const;
  Precision precision() const { return Precision(mpfr_get_prec(v_)); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits, e.g. "-1.2345e-7".
  std::string to_string(long digits) const;
  /// Base-2 exponent (value = m * 2^e with 1/2 <= |m| < 1); very negative for zero.
  long exponent2() const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  BigFloat& operator*=(long s);
  BigFloat& operator/=(long s);
  BigFloat operator-() const;

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator*(BigFloat a, long s) { return a *= s; }
  friend BigFloat operator*(long s, BigFloat a) { return a *= s; }
  friend BigFloat operator/(BigFloat a, long s) { return a /= s; }
  friend BigFloat operator+(BigFloat a, long s);
  friend BigFloat operator-(BigFloat a, long s);

  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, long b);
  friend bool operator==(const BigFloat& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

 private:
  mpfr_t v_;
};

/// Result precision of a binary operation.
inline Precision max_prec(const BigFloat& a, const BigFloat& b) {
  return Precision(std::max(a.precision().bits, b.precision().bits));
}

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat expm1(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log1p(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sinh(const BigFloat& x);
BigFloat cosh(const BigFloat& x);
BigFloat tanh(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat pow(const BigFloat& x, long n);
BigFloat gamma(const BigFloat& x);
BigFloat digamma(const BigFloat& x);
BigFloat floor(const BigFloat& x);
BigFloat round(const BigFloat& x);
BigFloat ldexp(const BigFloat& x, long e);
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat min(const BigFloat& a, const BigFloat& b);

/// |a - b| / max(|b|, tiny) when b != 0, else |a|.
BigFloat relative_difference(const BigFloat& a, const BigFloat& b);

}  // namespace bmlab::mpnum
