#include "bmlab/mpnum/kluyver.hpp"

#include <cmath>
#include <stdexcept>

#include "bmlab/mpnum/constants.hpp"

namespace bmlab::mpnum {

namespace {

constexpr long kGuard = 32;

BigFloat j0(const BigFloat& t, Precision p) {
  BigFloat r(p);
  mpfr_j0(r.raw(), t.raw(), MPFR_RNDN);
  return r;
}

BigFloat j1(const BigFloat& t, Precision p) {
  BigFloat r(p);
  mpfr_j1(r.raw(), t.raw(), MPFR_RNDN);
  return r;
}

BigFloat powi(const BigFloat& x, int n) {
  BigFloat r(1L, x.precision());
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

// Solve the square system by Gaussian elimination with partial pivoting.
std::vector<BigFloat> solve(std::vector<std::vector<BigFloat>> a, std::vector<BigFloat> b) {
  const size_t n = b.size();
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    for (size_t r = c + 1; r < n; ++r)
      if (abs(a[r][c]) > abs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    if (a[c][c].is_zero()) throw std::domain_error("extrapolation: singular system");
    for (size_t r = c + 1; r < n; ++r) {
      const BigFloat f = a[r][c] / a[c][c];
      for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<BigFloat> x(n, BigFloat(b[0].precision()));
  for (size_t i = n; i-- > 0;) {
    BigFloat s = b[i];
    for (size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return x;
}

}  // namespace

Estimate kluyver_p3(const BigFloat& x, Precision p) {
  if (x < 0L || x >= 1L) throw std::domain_error("kluyver_p3: I/K representation needs 0 <= x < 1");
  if (x.is_zero()) return {BigFloat(0L, p), BigFloat(0L, p)};
  const Precision w = p + kGuard;
  const auto m = kernel_moments({{KernelKind::I0, 1, 2, 1}}, x.at(w), p)[0];
  const BigFloat scale = BigFloat(6L, w) / (pi(w) * pi(w)) * x.at(w);
  return {(scale * m.value).at(p), (scale * m.error).at(p)};
}

Estimate kluyver_p7(const BigFloat& x, Precision p) {
  if (x < 0L || x > 1L) throw std::domain_error("kluyver_p7: I/K representation needs 0 <= x <= 1");
  if (x.is_zero()) return {BigFloat(0L, p), BigFloat(0L, p)};
  const Precision w = p + kGuard;
  const BigFloat pw = pi(w);
  const BigFloat pi4 = powi(pw, 4);
  const BigFloat c6 = BigFloat(4L, w) / (pi4 * pw * pw);
  const BigFloat c4 = BigFloat(2L, w) / pi4;
  Estimate e6{BigFloat(w), BigFloat(w)}, e4{BigFloat(w), BigFloat(w)};
  if (x == 1L) {
    e6 = ikm_estimate(2, 6, 1, p);
    e4 = ikm_estimate(4, 4, 1, p);
  } else {
    const auto v = kernel_moments({{KernelKind::I0, 1, 6, 1}, {KernelKind::I0, 3, 4, 1}}, x.at(w), p);
    e6 = v[0];
    e4 = v[1];
  }
  const BigFloat s = x.at(w) * 35L;
  return {(s * (c6 * e6.value - c4 * e4.value)).at(p), (s * (c6 * e6.error + c4 * e4.error)).at(p)};
}

Estimate kluyver_direct(int n, const BigFloat& x, Precision p, const OscillatoryOptions& osc) {
  if (n < 3) throw std::domain_error("kluyver_direct: n >= 3 required for convergence");
  if (x < 0L) throw std::domain_error("kluyver_direct: x >= 0");
  if (x.is_zero()) return {BigFloat(0L, p), BigFloat(0L, p)};
  const Precision po(std::min(p.bits, osc.tol_bits + 64));
  const Precision wo = po + 16;
  const BigFloat xw = x.at(wo);
  auto f = [&](const BigFloat& t) { return j0(xw * t, wo) * powi(j0(t, wo), n) * xw * t; };
  const BigFloat scale = x > 1L ? xw : BigFloat(1L, wo);
  const OscillatoryResult r = integrate_oscillatory(f, BesselKind::J0, scale, po, osc);
  if (!r.converged) throw std::runtime_error("kluyver_direct: oscillatory integral did not converge");
  return {r.value.at(p), r.error.at(p)};
}

BigFloat kluyver_p(int n, const BigFloat& x, Precision p) {
  if (n == 3) return kluyver_p3(x, p).value;
  if (n == 7) return kluyver_p7(x, p).value;
  return kluyver_direct(n, x, p).value;
}

Estimate p7_slope_direct(Precision p, const OscillatoryOptions& osc) {
  const Precision po(std::min(p.bits, osc.tol_bits + 64));
  const Precision wo = po + 16;
  auto f = [&](const BigFloat& t) { return -(j1(t, wo) * powi(j0(t, wo), 7) * t * t); };
  const OscillatoryResult r = integrate_oscillatory(f, BesselKind::J0, BigFloat(1L, wo), po, osc);
  if (!r.converged) throw std::runtime_error("p7_slope_direct: oscillatory integral did not converge");
  return {r.value.at(p), r.error.at(p)};
}

Estimate p7_limit_function(const BigFloat& x, Precision p) {
  if (x <= 0L || x >= 1L) throw std::domain_error("p7_limit_function: needs 0 < x < 1");
  const Precision w = p + kGuard;
  const BigFloat xw = x.at(w);
  const BigFloat pw = pi(w);
  const BigFloat pi4 = powi(pw, 4);
  const BigFloat c6 = BigFloat(4L, w) / (pi4 * pw * pw);
  const BigFloat c4 = BigFloat(2L, w) / pi4;
  const auto v = kernel_moments({{KernelKind::I0, 1, 2, 1},
                                 {KernelKind::I0, 1, 6, 3},
                                 {KernelKind::I1, 1, 6, 2},
                                 {KernelKind::I0, 3, 4, 3},
                                 {KernelKind::I1, 3, 4, 2}},
                                xw, p);
  const std::vector<BigFloat> coeff{BigFloat(1L, w) / (pi4 * 2L), c6, -c6 / xw, -c4, c4 / xw};
  BigFloat val(w), err(w);
  for (size_t i = 0; i < v.size(); ++i) {
    val += coeff[i] * v[i].value;
    err += abs(coeff[i]) * v[i].error;
  }
  return {val.at(p), err.at(p)};
}

BigFloat extrapolate_log_basis(const std::vector<BigFloat>& eps, const std::vector<BigFloat>& values) {
  const size_t n = eps.size();
  if (n == 0 || values.size() != n) throw std::invalid_argument("extrapolate_log_basis: size mismatch");
  std::vector<std::vector<BigFloat>> a;
  for (size_t r = 0; r < n; ++r) {
    const BigFloat& e = eps[r];
    const BigFloat le = log(e);
    std::vector<BigFloat> row;
    BigFloat power(1L, e.precision());
    row.push_back(power);
    while (row.size() < n) {
      power *= e;
      row.push_back(power * le);
      if (row.size() < n) row.push_back(power);
    }
    a.push_back(std::move(row));
  }
  return solve(std::move(a), values)[0];
}

LimitFit p7_limit(Precision p, int k_lo, int k_hi) {
  if (k_hi - k_lo < 2) throw std::invalid_argument("p7_limit: need at least three samples");
  LimitFit fit{BigFloat(p), BigFloat(p), {}, {}};
  for (int k = k_lo; k <= k_hi; ++k) {
    const BigFloat e = ldexp(BigFloat(1L, p), -k);
    fit.eps.push_back(e);
    fit.samples.push_back(p7_limit_function(BigFloat(1L, p) - e, p).value);
  }
  fit.value = extrapolate_log_basis(fit.eps, fit.samples);
  const std::vector<BigFloat> e2(fit.eps.begin() + 1, fit.eps.end());
  const std::vector<BigFloat> s2(fit.samples.begin() + 1, fit.samples.end());
  fit.spread = abs(fit.value - extrapolate_log_basis(e2, s2));
  return fit;
}

}  // namespace bmlab::mpnum
