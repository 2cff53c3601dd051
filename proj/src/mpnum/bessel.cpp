#include "bmlab/mpnum/bessel.hpp"

#include <cmath>
#include <stdexcept>

#include "bmlab/mpnum/constants.hpp"

namespace bmlab::mpnum {

std::string_view to_string(BesselKind k) {
  switch (k) {
    case BesselKind::I0: return "I0";
    case BesselKind::I1: return "I1";
    case BesselKind::K0: return "K0";
    case BesselKind::K1: return "K1";
    case BesselKind::J0: return "J0";
    case BesselKind::Y0: return "Y0";
    case BesselKind::J1: return "J1";
  }
  return "?";
}

double bessel_asymptotic_threshold(Precision p) { return static_cast<double>(p.bits + 20) * std::log(2.0) / 2.0 + 8.0; }

namespace detail {

ModifiedBesselSet modified_bessel_series(const BigFloat& t, Precision p) {
  const double td = t.to_double();
  // K0 = -(log(t/2) + gamma) I0 + sum H_k x^k/(k!)^2 cancels about 2t/ln2 bits
  const long boost = static_cast<long>(std::ceil(2.0 * td / std::log(2.0) + std::log2(td + 2.0))) + 20;
  const Precision w = p + boost;
  const BigFloat tw = t.at(w);
  const BigFloat x = tw * tw / 4;

  BigFloat term(1L, w);   // x^k/(k!)^2
  BigFloat term1(1L, w);  // x^k/(k!(k+1)!)
  BigFloat s0(1L, w), s1(1L, w), sh(w);
  BigFloat harmonic(w);
  const long stop = -(w.bits + 8);
  for (long k = 1;; ++k) {
    term *= x;
    term /= k * k;
    term1 *= x;
    term1 /= k * (k + 1);
    harmonic += BigFloat(exact::BigRational(1, k), w);
    s0 += term;
    s1 += term1;
    sh += term * harmonic;
    if (term.is_zero() || (term.exponent2() - s0.exponent2() < stop && static_cast<double>(k) > td)) break;
  }
  BigFloat i0 = s0;
  BigFloat i1 = s1 * tw / 2;
  BigFloat k0 = sh - (log(tw / 2) + euler_gamma(w)) * i0;
  // Wronskian: I0 K1 + I1 K0 = 1/t
  BigFloat k1 = (BigFloat(1L, w) / tw - i1 * k0) / i0;
  return {i0.at(p), i1.at(p), k0.at(p), k1.at(p)};
}

ModifiedBesselSet modified_bessel_asymptotic(const BigFloat& t, Precision p) {
  const Precision w = p + 24;
  const BigFloat tw = t.at(w);
  const BigFloat inv = BigFloat(1L, w) / tw;
  const long stop = -(w.bits + 4);
  // a_k(nu) = prod_{j<=k} (4 nu^2 - (2j-1)^2) / (k! 8^k)
  auto sums = [&](long nu, BigFloat& si, BigFloat& sk) {
    BigFloat a(1L, w);
    si = BigFloat(1L, w);
    sk = BigFloat(1L, w);
    long prev_exp = 0;
    for (long k = 1;; ++k) {
      a *= (4 * nu * nu - (2 * k - 1) * (2 * k - 1));
      a /= 8 * k;
      a *= inv;
      if ((k & 1) != 0) {
        si -= a;
      } else {
        si += a;
      }
      sk += a;
      const long e = a.exponent2();
      if (a.is_zero() || e < stop) break;
      if (k > 4 && e > prev_exp) throw std::domain_error("bessel asymptotic series diverged before reaching precision");
      prev_exp = e;
    }
  };
  BigFloat si0(w), sk0(w), si1(w), sk1(w);
  sums(0, si0, sk0);
  sums(1, si1, sk1);
  const BigFloat pw = pi(w);
  const BigFloat et = exp(tw);
  const BigFloat pre_i = et / sqrt(tw * pw * 2);
  const BigFloat pre_k = sqrt(pw / (tw * 2)) / et;
  return {(pre_i * si0).at(p), (pre_i * si1).at(p), (pre_k * sk0).at(p), (pre_k * sk1).at(p)};
}

}  // namespace detail

ModifiedBesselSet modified_bessel_all(const BigFloat& t, Precision p) {
  if (t <= 0L) throw std::domain_error("modified_bessel_all: t must be > 0");
  if (t.to_double() >= bessel_asymptotic_threshold(p)) return detail::modified_bessel_asymptotic(t, p);
  return detail::modified_bessel_series(t, p);
}

namespace {

BigFloat i_series_only(const BigFloat& t, Precision p, bool order_one) {
  const Precision w = p + 16 + static_cast<long>(std::log2(t.to_double() + 2.0));
  const BigFloat tw = t.at(w);
  const BigFloat x = tw * tw / 4;
  BigFloat term(1L, w), s(1L, w);
  const long stop = -(w.bits + 8);
  for (long k = 1;; ++k) {
    term *= x;
    term /= order_one ? k * (k + 1) : k * k;
    s += term;
    if (term.is_zero() || term.exponent2() - s.exponent2() < stop) break;
  }
  if (order_one) s *= tw / 2;
  return s.at(p);
}

}  // namespace

BigFloat bessel_eval(BesselKind kind, const BigFloat& t, Precision p) {
  if (t < 0L) throw std::domain_error("bessel_eval: negative argument");
  const bool singular_kind = kind == BesselKind::K0 || kind == BesselKind::K1 || kind == BesselKind::Y0;
  if (t.is_zero() && singular_kind) throw std::domain_error("bessel_eval: K/Y kinds need t > 0");
  BigFloat r(p);
  switch (kind) {
    case BesselKind::J0:
      mpfr_j0(r.raw(), t.raw(), MPFR_RNDN);
      return r;
    case BesselKind::J1:
      mpfr_j1(r.raw(), t.raw(), MPFR_RNDN);
      return r;
    case BesselKind::Y0:
      mpfr_y0(r.raw(), t.raw(), MPFR_RNDN);
      return r;
    case BesselKind::I0:
    case BesselKind::I1:
      if (t.is_zero()) return BigFloat(kind == BesselKind::I0 ? 1L : 0L, p);
      if (t.to_double() >= bessel_asymptotic_threshold(p)) {
        auto s = detail::modified_bessel_asymptotic(t, p);
        return kind == BesselKind::I0 ? s.i0 : s.i1;
      }
      return i_series_only(t, p, kind == BesselKind::I1);
    case BesselKind::K0:
    case BesselKind::K1: {
      auto s = modified_bessel_all(t, p);
      return kind == BesselKind::K0 ? s.k0 : s.k1;
    }
  }
  throw std::invalid_argument("bessel_eval: unknown kind");
}

}  // namespace bmlab::mpnum
