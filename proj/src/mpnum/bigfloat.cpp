#include "bmlab/mpnum/bigfloat.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace bmlab::mpnum {

long Precision::digits() const { return static_cast<long>(std::floor(static_cast<double>(bits) * 0.30102999566398120)); }

BigFloat::BigFloat(Precision p) {
  mpfr_init2(v_, p.bits);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v, Precision p) {
  mpfr_init2(v_, p.bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(double v, Precision p) {
  mpfr_init2(v_, p.bits);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const std::string& decimal, Precision p) {
  mpfr_init2(v_, p.bits);
  if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    throw std::invalid_argument("BigFloat: cannot parse '" + decimal + "'");
  }
}

BigFloat::BigFloat(const exact::BigRational& q, Precision p) {
  mpfr_init2(v_, p.bits);
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::at(Precision p) const {
  BigFloat r(p);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(long digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  if (digits < 1) digits = 1;
  mpfr_exp_t e = 0;
  std::unique_ptr<char, void (*)(char*)> s(mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN),
                                          mpfr_free_str);
  std::string m = s.get();
  std::string out;
  if (m[0] == '-') {
    out = "-";
    m.erase(0, 1);
  }
  out += m.substr(0, 1);
  if (m.size() > 1) out += "." + m.substr(1);
  out += "e" + std::to_string(static_cast<long>(e) - 1);
  return out;
}

long BigFloat::exponent2() const {
  if (is_zero()) return -(1L << 40);
  return mpfr_get_exp(v_);
}

namespace {
// Grow the target precision to the larger of the operands before an in-place op.
void widen(mpfr_ptr v, mpfr_srcptr o) {
  if (mpfr_get_prec(o) > mpfr_get_prec(v)) mpfr_prec_round(v, mpfr_get_prec(o), MPFR_RNDN);
}
}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  widen(v_, o.v_);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  widen(v_, o.v_);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  widen(v_, o.v_);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  widen(v_, o.v_);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(long s) {
  mpfr_mul_si(v_, v_, s, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(long s) {
  mpfr_div_si(v_, v_, s, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigFloat operator+(BigFloat a, long s) {
  mpfr_add_si(a.v_, a.v_, s, MPFR_RNDN);
  return a;
}

BigFloat operator-(BigFloat a, long s) {
  mpfr_sub_si(a.v_, a.v_, s, MPFR_RNDN);
  return a;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

std::partial_ordering operator<=>(const BigFloat& a, long b) {
  if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

#define BMLAB_UNARY(name, fn)              \
  BigFloat name(const BigFloat& x) {       \
    BigFloat r(x.precision());             \
    fn(r.raw(), x.raw(), MPFR_RNDN);       \
    return r;                              \
  }

BMLAB_UNARY(abs, mpfr_abs)
BMLAB_UNARY(sqrt, mpfr_sqrt)
BMLAB_UNARY(exp, mpfr_exp)
BMLAB_UNARY(expm1, mpfr_expm1)
BMLAB_UNARY(log, mpfr_log)
BMLAB_UNARY(log1p, mpfr_log1p)
BMLAB_UNARY(sin, mpfr_sin)
BMLAB_UNARY(cos, mpfr_cos)
BMLAB_UNARY(sinh, mpfr_sinh)
BMLAB_UNARY(cosh, mpfr_cosh)
BMLAB_UNARY(tanh, mpfr_tanh)
BMLAB_UNARY(gamma, mpfr_gamma)
BMLAB_UNARY(digamma, mpfr_digamma)

#undef BMLAB_UNARY

BigFloat floor(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_floor(r.raw(), x.raw());
  return r;
}

BigFloat round(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_round(r.raw(), x.raw());
  return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(max_prec(y, x));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, const BigFloat& y) {
  BigFloat r(max_prec(x, y));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, long n) {
  BigFloat r(x.precision());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat r(x.precision());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
BigFloat min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }

BigFloat relative_difference(const BigFloat& a, const BigFloat& b) {
  BigFloat d = abs(a - b);
  if (b.is_zero()) return d;
  return d / abs(b);
}

}  // namespace bmlab::mpnum
