#pragma once

#include "bmlab/mpnum/bigfloat.hpp"

namespace bmlab::mpnum {

class BigComplex {
 public:
  explicit BigComplex(Precision p = Precision()) : re_(p), im_(p) {}
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit BigComplex(const BigFloat& re) : re_(re), im_(re.precision()) {}

  static BigComplex i(Precision p) { return BigComplex(BigFloat(p), BigFloat(1L, p)); }

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  BigFloat& re() { return re_; }
  BigFloat& im() { return im_; }
  Precision precision() const { return max_prec(re_, im_); }

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  BigComplex& operator*=(const BigFloat& s);
  BigComplex& operator/=(const BigFloat& s);
  BigComplex& operator*=(long s);
  BigComplex operator-() const { return BigComplex(-re_, -im_); }

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, const BigFloat& s) { return a *= s; }
  friend BigComplex operator*(const BigFloat& s, BigComplex a) { return a *= s; }
  friend BigComplex operator/(BigComplex a, const BigFloat& s) { return a /= s; }
  friend BigComplex operator*(BigComplex a, long s) { return a *= s; }
  friend BigComplex operator*(long s, BigComplex a) { return a *= s; }

 private:
  BigFloat re_;
  BigFloat im_;
};

BigComplex conj(const BigComplex& z);
BigFloat abs(const BigComplex& z);
BigFloat norm(const BigComplex& z);  // |z|^2
BigFloat arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
/// Principal branch.
BigComplex log(const BigComplex& z);
/// Principal branch.
BigComplex sqrt(const BigComplex& z);
BigComplex pow(const BigComplex& z, long n);
/// exp(i*theta)
BigComplex expi(const BigFloat& theta);

}  // namespace bmlab::mpnum
