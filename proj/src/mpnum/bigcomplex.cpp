#include "bmlab/mpnum/bigcomplex.hpp"

namespace bmlab::mpnum {

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  const BigFloat d = norm(o);
  BigFloat re = (re_ * o.re_ + im_ * o.im_) / d;
  im_ = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(re);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigFloat& s) {
  re_ *= s;
  im_ *= s;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigFloat& s) {
  re_ /= s;
  im_ /= s;
  return *this;
}

BigComplex& BigComplex::operator*=(long s) {
  re_ *= s;
  im_ *= s;
  return *this;
}

BigComplex conj(const BigComplex& z) { return BigComplex(z.re(), -z.im()); }

BigFloat norm(const BigComplex& z) { return z.re() * z.re() + z.im() * z.im(); }

BigFloat abs(const BigComplex& z) {
  BigFloat r(z.precision());
  mpfr_hypot(r.raw(), z.re().raw(), z.im().raw(), MPFR_RNDN);
  return r;
}

BigFloat arg(const BigComplex& z) { return atan2(z.im(), z.re()); }

BigComplex expi(const BigFloat& theta) {
  BigFloat s(theta.precision()), c(theta.precision());
  mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
  return BigComplex(std::move(c), std::move(s));
}

BigComplex exp(const BigComplex& z) { return expi(z.im()) * exp(z.re()); }

BigComplex log(const BigComplex& z) { return BigComplex(log(abs(z)), arg(z)); }

BigComplex sqrt(const BigComplex& z) {
  const BigFloat r = abs(z);
  if (r.is_zero()) return BigComplex(z.precision());
  // sqrt((r + |x|)/2) on the larger component avoids cancellation
  BigFloat a = sqrt((r + abs(z.re())) / 2);
  if (z.re() >= 0L) return BigComplex(a, z.im() / (a * 2));
  BigFloat b = abs(z.im()) / (a * 2);
  if (z.im() < 0L) a = -a;
  return BigComplex(b, a);
}

BigComplex pow(const BigComplex& z, long n) {
  if (n < 0) return BigComplex(BigFloat(1L, z.precision())) / pow(z, -n);
  BigComplex result(BigFloat(1L, z.precision()));
  BigComplex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

}  // namespace bmlab::mpnum
