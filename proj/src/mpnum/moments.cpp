#include "bmlab/mpnum/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

#include "bmlab/exact/errors.hpp"
#include "bmlab/mpnum/constants.hpp"

namespace bmlab::mpnum {

using exact::BigInt;
using exact::BigRational;

namespace {

constexpr long kGuard = 32;
constexpr double kDecayEps = 1e-12;

bool is_modified(KernelKind k) {
  return k == KernelKind::I0 || k == KernelKind::I1 || k == KernelKind::K0 || k == KernelKind::K1;
}

BesselKind to_bessel(KernelKind k) {
  switch (k) {
    case KernelKind::J0: return BesselKind::J0;
    case KernelKind::Y0: return BesselKind::Y0;
    case KernelKind::J1: return BesselKind::J1;
    case KernelKind::I0: return BesselKind::I0;
    case KernelKind::I1: return BesselKind::I1;
    case KernelKind::K0: return BesselKind::K0;
    case KernelKind::K1: return BesselKind::K1;
    case KernelKind::None: break;
  }
  throw std::invalid_argument("kernel has no Bessel kind");
}

BigFloat powi(const BigFloat& x, int n) {
  BigFloat r(1L, x.precision());
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

// I0^a K0^b with every partial product bounded: pairs first, then the excess factor.
BigFloat bessel_power(const BigFloat& i0, const BigFloat& k0, int a, int b) {
  const int n = std::min(a, b);
  return powi(i0 * k0, n) * (a > b ? powi(i0, a - n) : powi(k0, b - n));
}

BigFloat oscillating_kernel(KernelKind k, const BigFloat& arg, Precision p) {
  BigFloat r(p);
  switch (k) {
    case KernelKind::J0: mpfr_j0(r.raw(), arg.raw(), MPFR_RNDN); break;
    case KernelKind::J1: mpfr_j1(r.raw(), arg.raw(), MPFR_RNDN); break;
    case KernelKind::Y0: mpfr_y0(r.raw(), arg.raw(), MPFR_RNDN); break;
    default: throw std::invalid_argument("not an oscillating kernel");
  }
  return r;
}

double kernel_scale(const MomentSpec& s) {
  if (s.kernel == KernelKind::None) return 0.0;
  if (!s.param) throw std::invalid_argument("MomentSpec: kernel needs a parameter");
  const double v = s.param->to_double();
  if (is_modified(s.kernel)) {
    if (v < 0) throw std::domain_error("MomentSpec: modified kernels need u >= 0");
    return std::sqrt(v);
  }
  if (v <= 0) throw std::domain_error("MomentSpec: oscillating kernels need x > 0");
  return v;
}

// a^{(a)}_n: coefficients of P(x)^a where I0K0 = P(1/t^2) / (2t)
const std::vector<BigRational>& series_power(int a, int count) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<BigRational>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(a, count);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const auto base = i0k0_asymptotic_coefficients(count);
  std::vector<BigRational> acc(static_cast<size_t>(count), BigRational(0));
  acc[0] = 1;
  for (int f = 0; f < a; ++f) {
    std::vector<BigRational> next(static_cast<size_t>(count), BigRational(0));
    for (int i = 0; i < count; ++i) {
      if (acc[static_cast<size_t>(i)] == 0) continue;
      for (int j = 0; i + j < count; ++j) next[static_cast<size_t>(i + j)] += acc[static_cast<size_t>(i)] * base[static_cast<size_t>(j)];
    }
    acc = std::move(next);
  }
  return cache.emplace(key, std::move(acc)).first->second;
}

BigRational pow2_inv(int a) {
  BigInt d = 1;
  d <<= static_cast<unsigned>(a);
  return BigRational(1, d);
}

}  // namespace

// ---------------------------------------------------------------- convergence

double decay_rate(const MomentSpec& s) {
  const double base = static_cast<double>(s.b - s.a);
  const double v = kernel_scale(s);
  switch (s.kernel) {
    case KernelKind::I0:
    case KernelKind::I1: return base - v;
    case KernelKind::K0:
    case KernelKind::K1: return base + v;
    default: return base;
  }
}

bool converges(const MomentSpec& s) {
  if (s.a < 0 || s.b < 0) return false;
  if (s.honorary) return s.kernel == KernelKind::None && s.a == 4 && s.b == 4 && s.m == 3;
  // near 0: log^b t * t^m, plus 1/t from K1
  const int low = s.m - (s.kernel == KernelKind::K1 ? 1 : 0);
  if (low < 0) return false;
  double d = 0;
  try {
    d = decay_rate(s);
  } catch (const std::exception&) {
    return false;
  }
  if (d > kDecayEps) return true;
  if (d < -kDecayEps) return false;
  if (s.a != s.b) return false;
  if (s.kernel == KernelKind::None) return s.m - s.a < -1;
  if (s.kernel == KernelKind::J0 || s.kernel == KernelKind::Y0) return s.m - s.a < 0;
  return false;
}

// ---------------------------------------------------------------- asymptotic series

std::vector<BigRational> i0k0_asymptotic_coefficients(int count) {
  const int n_max = 2 * count;
  // a_k(0) = prod_{j<=k} (-(2j-1)^2) / (k! 8^k); I0 carries (-1)^k a_k t^-k, K0 carries a_k t^-k
  std::vector<BigRational> ak(static_cast<size_t>(n_max), BigRational(0));
  ak[0] = 1;
  for (int k = 1; k < n_max; ++k) {
    ak[static_cast<size_t>(k)] = ak[static_cast<size_t>(k - 1)] * BigRational(-(2 * k - 1) * (2 * k - 1), 8 * k);
  }
  std::vector<BigRational> out(static_cast<size_t>(count), BigRational(0));
  for (int j = 0; j < count; ++j) {
    const int n = 2 * j;
    BigRational s = 0;
    for (int k = 0; k <= n; ++k) {
      const BigRational term = ak[static_cast<size_t>(k)] * ak[static_cast<size_t>(n - k)];
      s += (k % 2 == 0) ? term : BigRational(-term);
    }
    out[static_cast<size_t>(j)] = s;
  }
  return out;
}

long power_law_cut(Precision p) { return static_cast<long>(std::ceil(0.37 * static_cast<double>(p.bits + kGuard))) + 8; }

Estimate power_law_tail(const std::vector<PowerLawTerm>& terms, const BigFloat& T, Precision p) {
  const Precision w = p + kGuard;
  const int count = static_cast<int>(std::clamp(std::ceil(T.to_double()), 8.0, 400.0));
  std::map<int, BigRational, std::greater<>> by_exp;
  for (const auto& term : terms) {
    const auto& q = series_power(term.a, count);
    const BigRational scale = term.coeff * pow2_inv(term.a);
    for (int n = 0; n < count; ++n) by_exp[term.m - term.a - 2 * n] += scale * q[static_cast<size_t>(n)];
  }
  const BigFloat Tw = T.at(w);
  BigFloat sum(w), last(w);
  BigFloat prev_mag(w);
  bool started = false;
  for (const auto& [e, c] : by_exp) {
    if (c == 0) continue;
    if (e >= -1) throw std::domain_error("power_law_tail: combination decays too slowly to integrate");
    const BigFloat term = BigFloat(c, w) * pow(Tw, static_cast<long>(e + 1)) / static_cast<long>(-e - 1);
    const BigFloat mag = abs(term);
    if (started && mag > prev_mag) break;  // past the smallest term of the asymptotic series
    sum += term;
    last = mag;
    prev_mag = mag;
    started = true;
    if (mag.is_zero() || mag.exponent2() < sum.exponent2() - w.bits) break;
  }
  return {sum.at(p), last.at(p)};
}

std::vector<BigRational> hankel_model_coefficients(int a, int m, int count) {
  const int e = m - a;
  if (e >= 0 || (-e - 1) % 2 != 0) throw UnsupportedError("hankel model needs m - a = -1 - 2r");
  const int r = (-e - 1) / 2;
  const auto& q = series_power(a, r + count + 1);
  const BigRational scale = pow2_inv(a);
  std::vector<BigRational> d;
  for (int n = r; n < r + count; ++n) {
    BigRational target = scale * q[static_cast<size_t>(n - r)];
    for (int j = r; j < n; ++j) {
      const BigRational c = BigRational(exact::binomial(static_cast<unsigned>(n), static_cast<unsigned>(n - j))) * d[static_cast<size_t>(j - r)];
      target -= ((n - j) % 2 == 0) ? c : BigRational(-c);
    }
    d.push_back(target);
  }
  return d;
}

// ---------------------------------------------------------------- on-shell moments

std::vector<Estimate> ikm_batch(int a, int b, const std::vector<int>& powers, Precision p, const QuadOptions& opt) {
  for (int m : powers) {
    MomentSpec s{KernelKind::None, a, b, m, std::nullopt, false};
    if (!converges(s)) throw std::domain_error("ikm: divergent moment");
  }
  if (a == b) {
    std::vector<Estimate> out;
    for (int m : powers) out.push_back(power_law_moment({{BigRational(1), a, m}}, p, opt));
    return out;
  }
  const size_t nc = powers.size();
  auto f = [&](const QuadNode& node, const ModifiedBesselSet& s, std::span<BigFloat> out) {
    const BigFloat base = bessel_power(s.i0, s.k0, a, b);
    for (size_t c = 0; c < nc; ++c) out[c] = base * powi(node.t, powers[c]);
  };
  const QuadResult lo = integrate(*BesselTable::unit(p), nc, f, opt);
  const QuadResult hi = integrate(*BesselTable::tail(static_cast<double>(b - a), p), nc, f, opt);
  std::vector<Estimate> out;
  for (size_t c = 0; c < nc; ++c) {
    out.push_back({(lo.values[c] + hi.values[c]).at(p), (lo.errors[c] + hi.errors[c]).at(p)});
  }
  return out;
}

Estimate ikm_estimate(int a, int b, int m, Precision p, const QuadOptions& opt) { return ikm_batch(a, b, {m}, p, opt)[0]; }

BigFloat ikm(int a, int b, int m, Precision p) { return ikm_estimate(a, b, m, p).value; }

Estimate power_law_moment(const std::vector<PowerLawTerm>& terms, Precision p, const QuadOptions& opt) {
  if (terms.empty()) throw std::invalid_argument("power_law_moment: no terms");
  for (const auto& t : terms)
    if (t.a < 0 || t.m < 0) throw std::domain_error("power_law_moment: need a >= 0 and m >= 0");
  const Precision w = p + kGuard;
  std::vector<BigFloat> coeffs;
  for (const auto& t : terms) coeffs.emplace_back(t.coeff, w);
  auto f = [&](const QuadNode& node, const ModifiedBesselSet& s, std::span<BigFloat> out) {
    const BigFloat prod = s.i0 * s.k0;
    BigFloat v(w);
    for (size_t i = 0; i < terms.size(); ++i) v += coeffs[i] * powi(prod, terms[i].a) * powi(node.t, terms[i].m);
    out[0] = v;
  };
  const long cut = power_law_cut(p);
  // the tail raises the domain error for slowly decaying combinations before any quadrature
  const Estimate tail = power_law_tail(terms, BigFloat(cut, w), p);
  const QuadResult lo = integrate(*BesselTable::unit(p), 1, f, opt);
  const QuadResult mid = integrate(*BesselTable::finite(1, cut, p), 1, f, opt);
  return {(lo.values[0] + mid.values[0] + tail.value).at(p), (lo.errors[0] + mid.errors[0] + tail.error).at(p)};
}

Estimate ikmh443_estimate(Precision p, const QuadOptions& opt) {
  return power_law_moment({{BigRational(1), 4, 3}, {BigRational(-1, 4), 2, 1}}, p, opt);
}

BigFloat ikmh443(Precision p) { return ikmh443_estimate(p).value; }

// ---------------------------------------------------------------- modified kernels

std::vector<Estimate> kernel_moments(const std::vector<KernelTerm>& terms, const BigFloat& v, Precision p,
                                     const QuadOptions& opt) {
  if (terms.empty()) return {};
  if (!(v > 0L)) throw std::domain_error("kernel_moments: v must be positive");
  double decay = 1e300;
  for (const auto& t : terms) {
    if (t.kernel != KernelKind::None && !is_modified(t.kernel))
      throw std::invalid_argument("kernel_moments: kernels are limited to I0, I1, K0, K1");
    MomentSpec s{t.kernel, t.a, t.b, t.m, v * v, false};
    if (!converges(s) || decay_rate(s) <= kDecayEps) throw std::domain_error("kernel_moments: divergent term");
    decay = std::min(decay, decay_rate(s));
  }
  const Precision w = p + kGuard;
  const BigFloat vw = v.at(w);
  const size_t nc = terms.size();
  auto f = [&](const QuadNode& node, const ModifiedBesselSet& s, std::span<BigFloat> out) {
    const ModifiedBesselSet k = modified_bessel_all(vw * node.t, w);
    for (size_t c = 0; c < nc; ++c) {
      const auto& t = terms[c];
      const bool grows = t.kernel == KernelKind::I0 || t.kernel == KernelKind::I1;
      // a growing kernel is paired with one spare K0 so no factor leaves the exponent range
      const int spare = grows && t.b > t.a ? 1 : 0;
      BigFloat val = bessel_power(s.i0, s.k0, t.a, t.b - spare) * powi(node.t, t.m);
      switch (t.kernel) {
        case KernelKind::I0: val *= spare ? k.i0 * s.k0 : k.i0; break;
        case KernelKind::I1: val *= spare ? k.i1 * s.k0 : k.i1; break;
        case KernelKind::K0: val *= k.k0; break;
        case KernelKind::K1: val *= k.k1; break;
        default: break;
      }
      out[c] = val;
    }
  };
  const QuadResult lo = integrate(*BesselTable::unit(p), nc, f, opt);
  const QuadResult hi = integrate(*BesselTable::tail(decay, p), nc, f, opt);
  std::vector<Estimate> out;
  for (size_t c = 0; c < nc; ++c) out.push_back({(lo.values[c] + hi.values[c]).at(p), (lo.errors[c] + hi.errors[c]).at(p)});
  return out;
}

// ---------------------------------------------------------------- off-shell dispatcher

namespace {

Estimate oscillating_exponential(const MomentSpec& s, const BigFloat& x, double decay, Precision p, const QuadOptions& opt,
                                 const OscillatoryOptions& osc) {
  const Precision w = p + kGuard;
  if (x.to_double() <= decay) {
    auto f = [&](const QuadNode& node, const ModifiedBesselSet& b, std::span<BigFloat> out) {
      out[0] = bessel_power(b.i0, b.k0, s.a, s.b) * powi(node.t, s.m) * oscillating_kernel(s.kernel, x.at(w) * node.t, w);
    };
    const QuadResult lo = integrate(*BesselTable::unit(p), 1, f, opt);
    const QuadResult hi = integrate(*BesselTable::tail(decay, p), 1, f, opt);
    return {(lo.values[0] + hi.values[0]).at(p), (lo.errors[0] + hi.errors[0]).at(p)};
  }
  const Precision po(std::min(p.bits, osc.tol_bits + 64));
  const Precision wo = po + 16;
  const BigFloat xw = x.at(wo);
  auto g = [&](const BigFloat& t) {
    const ModifiedBesselSet b = modified_bessel_all(t, wo);
    return bessel_power(b.i0, b.k0, s.a, s.b) * powi(t, s.m) * oscillating_kernel(s.kernel, xw * t, wo);
  };
  OscillatoryOptions o = osc;
  o.negligible_after = std::max(o.negligible_after, static_cast<double>(o.tol_bits + 16) * std::log(2.0) / decay);
  const OscillatoryResult r = integrate_oscillatory(g, to_bessel(s.kernel), xw, po, o);
  if (!r.converged) throw std::runtime_error("offshell_moment: oscillatory integral did not converge");
  return {r.value.at(p), r.error.at(p)};
}

}  // namespace

Estimate power_law_levin(const MomentSpec& s, const BigFloat& x, Precision p, const OscillatoryOptions& osc) {
  if (s.kernel != KernelKind::J0 && s.kernel != KernelKind::Y0)
    throw UnsupportedError("power-law oscillatory moments need a J0 or Y0 kernel");
  const Precision po(std::min(p.bits, osc.tol_bits + 64));
  const Precision wo = po + 16;
  const BigFloat xw = x.at(wo);
  auto g = [&](const BigFloat& t) {
    const ModifiedBesselSet b = modified_bessel_all(t, wo);
    return powi(b.i0 * b.k0, s.a) * powi(t, s.m) * oscillating_kernel(s.kernel, xw * t, wo);
  };
  OscillatoryOptions o = osc;
  // the tail is never negligible: always extrapolate
  o.negligible_after = std::numeric_limits<double>::infinity();
  const OscillatoryResult r = integrate_oscillatory(g, to_bessel(s.kernel), xw, po, o);
  if (!r.converged) throw std::runtime_error("offshell_moment: power-law oscillatory integral did not converge");
  return {r.value.at(p), r.error.at(p)};
}

namespace {

Estimate hankel_subtracted(const MomentSpec& s, const BigFloat& x, Precision p, const OscillatoryOptions& osc) {
  if (s.kernel == KernelKind::Y0) return power_law_levin(s, x, p, osc);
  if (s.kernel != KernelKind::J0) throw UnsupportedError("power-law oscillatory moments need a J0 or Y0 kernel");
  constexpr int kModelTerms = 8;
  const Precision po(std::min(p.bits, osc.tol_bits + 64));
  const Precision wo = po + 16;
  const int r = (s.a - s.m - 1) / 2;
  const auto d = hankel_model_coefficients(s.a, s.m, kModelTerms);

  // analytic part: sum_j d_j x^j K_j(x) / (2^j j!)
  const int jmax = r + kModelTerms;
  const Precision wk = wo + 2L * jmax + 16;
  const BigFloat xk = x.at(wk);
  const ModifiedBesselSet kb = modified_bessel_all(xk, wk);
  std::vector<BigFloat> kj{kb.k0, kb.k1};
  for (int j = 1; j < jmax; ++j) kj.push_back(kj[static_cast<size_t>(j - 1)] + BigFloat(2L * j, wk) / xk * kj[static_cast<size_t>(j)]);
  BigFloat analytic(wk);
  for (int i = 0; i < kModelTerms; ++i) {
    const int j = r + i;
    BigFloat term = BigFloat(d[static_cast<size_t>(i)], wk) * pow(xk, static_cast<long>(j)) * kj[static_cast<size_t>(j)];
    term /= BigFloat(BigRational(BigInt(exact::factorial(static_cast<unsigned>(j))) << static_cast<unsigned>(j)), wk);
    analytic += term;
  }

  std::vector<BigFloat> dw;
  for (const auto& c : d) dw.emplace_back(c, wo);
  const BigFloat xw = x.at(wo);
  auto rem = [&](const BigFloat& t) {
    const ModifiedBesselSet b = modified_bessel_all(t, wo);
    const BigFloat g = powi(b.i0 * b.k0, s.a) * powi(t, s.m);
    const BigFloat sq = BigFloat(1L, wo) / (t * t + 1L);
    BigFloat pw = pow(sq, static_cast<long>(r + 1));
    BigFloat h(wo);
    for (const auto& c : dw) {
      h += c * pw;
      pw *= sq;
    }
    h *= t;
    return (g - h) * oscillating_kernel(KernelKind::J0, xw * t, wo);
  };

  // first omitted coefficient of the remainder's expansion sets where plain summation may stop
  const int n = r + kModelTerms;
  const auto& q = series_power(s.a, n - r + 1);
  BigRational next = pow2_inv(s.a) * q[static_cast<size_t>(n - r)];
  for (int j = r; j < n; ++j) {
    const BigRational c = BigRational(exact::binomial(static_cast<unsigned>(n), static_cast<unsigned>(n - j))) * d[static_cast<size_t>(j - r)];
    next -= ((n - j) % 2 == 0) ? c : BigRational(-c);
  }
  const double log_next = std::log(std::abs(next.get_d()) + 1e-300);
  OscillatoryOptions o = osc;
  const double t_neg = std::exp((log_next + static_cast<double>(o.tol_bits + 8) * std::log(2.0)) / (2.0 * n + 1.0));
  o.negligible_after = std::max({o.negligible_after, t_neg, 4.0});
  const OscillatoryResult res = integrate_oscillatory(rem, BesselKind::J0, xw, po, o);
  if (!res.converged) throw std::runtime_error("offshell_moment: oscillatory remainder did not converge");
  return {(analytic + res.value).at(p), res.error.at(p)};
}

}  // namespace

Estimate offshell_moment(const MomentSpec& spec, Precision p, const QuadOptions& opt, const OscillatoryOptions& osc) {
  if (!converges(spec)) throw std::domain_error("offshell_moment: divergent moment");
  if (spec.honorary) return ikmh443_estimate(p, opt);
  if (spec.kernel == KernelKind::None) return ikm_estimate(spec.a, spec.b, spec.m, p, opt);
  const BigFloat param = spec.param->at(p + kGuard);
  if (is_modified(spec.kernel)) {
    if (param.is_zero()) {
      // I0(0) = 1, I1(0) = 0
      if (spec.kernel == KernelKind::I0) return ikm_estimate(spec.a, spec.b, spec.m, p, opt);
      if (spec.kernel == KernelKind::I1) return {BigFloat(0L, p), BigFloat(0L, p)};
      throw std::domain_error("offshell_moment: K kernels need u > 0");
    }
    return kernel_moments({{spec.kernel, spec.a, spec.b, spec.m}}, sqrt(param), p, opt)[0];
  }
  const double decay = decay_rate(spec);
  if (decay > kDecayEps) return oscillating_exponential(spec, param, decay, p, opt, osc);
  return hankel_subtracted(spec, param, p, osc);
}

}  // namespace bmlab::mpnum
