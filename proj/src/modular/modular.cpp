#include "bmlab/modular/modular.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "bmlab/mpnum/constants.hpp"
#include "bmlab/mpnum/oscillatory.hpp"
#include "bmlab/mpnum/quadrature.hpp"

namespace bmlab::modular {

namespace {

constexpr int kMaxReductions = 200;

BigComplex cx(const BigFloat& re) { return BigComplex(re); }

BigComplex times_i(const BigComplex& z) { return BigComplex(-z.im(), z.re()); }

BigComplex inv(const BigComplex& z) {
  const Precision p = z.precision();
  return BigComplex(BigFloat(1L, p), BigFloat(p)) / z;
}

std::string short_str(const BigComplex& z) {
  return z.re().to_string(8) + (z.im().sign() < 0 ? "" : "+") + z.im().to_string(8) + "i";
}

/// Pentagonal series for eta and its log derivative, no reduction.
EtaValue eta_series(const BigComplex& tau, Precision p) {
  const BigFloat two_pi = mpnum::pi(p) * 2L;
  const BigComplex q = exp(times_i(tau * two_pi));
  // log2 |q| per unit exponent
  const double log2q = -two_pi.to_double() * tau.im().to_double() / std::log(2.0);
  if (!(log2q < 0)) throw std::runtime_error("eta: Im tau must be positive");
  const double stop = -static_cast<double>(p.bits + 8);

  BigComplex s(BigFloat(1L, p), BigFloat(p));
  BigComplex d(p);
  for (long k = 1;; ++k) {
    const long e1 = k * (3 * k - 1) / 2;
    if (static_cast<double>(e1) * log2q < stop) break;
    if (k > 100000) throw std::runtime_error("eta: series does not converge at tau = " + short_str(tau));
    const long e2 = k * (3 * k + 1) / 2;
    const long sign = (k % 2 == 0) ? 1 : -1;
    const BigComplex q1 = pow(q, e1);
    s += q1 * sign;
    d += q1 * (sign * e1);
    if (static_cast<double>(e2) * log2q >= stop) {
      const BigComplex q2 = pow(q, e2);
      s += q2 * sign;
      d += q2 * (sign * e2);
    }
  }
  const BigFloat pi = mpnum::pi(p);
  EtaValue out;
  out.value = exp(times_i(tau * (pi / 12L))) * s;
  // d/dtau log eta = pi i / 12 + 2 pi i q S'(q)/S(q)
  out.logderiv = times_i(cx(pi / 12L) + d / s * two_pi);
  return out;
}

EtaValue eta_reduced(const BigComplex& tau, Precision p, int depth) {
  if (depth > kMaxReductions)
    throw std::runtime_error("eta: reduction did not reach Im tau >= 1/4 (tau = " + short_str(tau) + ")");
  if (tau.im() >= BigFloat(0.25, p)) return eta_series(tau, p);
  const BigFloat n = round(tau.re());
  BigComplex t1 = tau;
  t1.re() -= n;
  const BigComplex t2 = -inv(t1);
  EtaValue inner = eta_reduced(t2, p, depth + 1);
  EtaValue out;
  // eta(-1/t) = sqrt(t/i) eta(t); eta(t + n) = e^{pi i n/12} eta(t)
  const BigComplex root = sqrt(BigComplex(t1.im(), -t1.re()));
  const BigComplex shift = mpnum::expi(mpnum::pi(p) * n / 12L);
  out.value = shift * inner.value / root;
  out.logderiv = inner.logderiv / (t1 * t1) - inv(t1 * 2L);
  out.inversions = inner.inversions + 1;
  return out;
}

struct EtaSet {
  EtaValue e1, e2, e3, e6;
};

EtaSet eta_set(const BigComplex& z, Precision p, const EvalOptions& opt) {
  return {eta_eval(z, p, opt), eta_eval(z * 2L, p, opt), eta_eval(z * 3L, p, opt), eta_eval(z * 6L, p, opt)};
}

BigComplex combine(ModularObject obj, const EtaSet& s) {
  const BigComplex& e1 = s.e1.value;
  const BigComplex& e2 = s.e2.value;
  const BigComplex& e3 = s.e3.value;
  const BigComplex& e6 = s.e6.value;
  const Precision p = e1.precision();
  switch (obj) {
    case ModularObject::X63:
      return pow(e2 * e6 / (e1 * e3), 6);
    case ModularObject::Z63:
      return pow(e1 * e3, 4) / pow(e2 * e6, 2);
    case ModularObject::F66: {
      const BigComplex a = e2 * e3, b = e1 * e6;
      return pow(a, 9) / pow(b, 3) + pow(b, 9) / pow(a, 3);
    }
    case ModularObject::Alpha3: {
      const BigComplex r = pow(e1 / e3, 12) / BigFloat(27L, p);
      return inv(r + cx(BigFloat(1L, p)));
    }
  }
  throw std::logic_error("combine: unknown object");
}

BigComplex phi_part(const BigComplex& f, const BigComplex& x) {
  const Precision p = f.precision();
  const BigComplex d = x * (-64L) - cx(BigFloat(4L, p));
  return f * (inv(d * d) * 2L + inv(d * 3L));
}

BigComplex chi_part(const BigComplex& f, const BigComplex& x) {
  const Precision p = f.precision();
  const BigComplex d = x * (-64L) - cx(BigFloat(16L, p));
  return f * (inv(d * d) * 8L + inv(d * 3L) * 2L);
}

/// f * [2/d4^2 + 1/(3 d4) + 8/d16^2 + 2/(3 d16)] and f * (sum of the term magnitudes), d_c = -64x - c.
std::pair<BigFloat, BigFloat> phi_chi_real(const BigFloat& f, const BigFloat& x) {
  const Precision p = f.precision();
  const BigFloat d4 = x * (-64L) - 4L, d16 = x * (-64L) - 16L;
  const BigFloat sq = BigFloat(2L, p) / (d4 * d4) + BigFloat(8L, p) / (d16 * d16);
  const BigFloat lin = BigFloat(1L, p) / (d4 * 3L) + BigFloat(2L, p) / (d16 * 3L);
  // on the imaginary axis x > 0, so d4, d16 < 0 and the linear terms are negative
  return {f * (sq + lin), abs(f) * (sq - lin)};
}

}  // namespace

std::string object_name(ModularObject o) {
  switch (o) {
    case ModularObject::X63: return "X63";
    case ModularObject::Z63: return "Z63";
    case ModularObject::F66: return "f66";
    case ModularObject::Alpha3: return "alpha3";
  }
  return "?";
}

HalfPlanePoint::HalfPlanePoint(BigComplex z) : z_(std::move(z)) {
  if (!(z_.im() > 0L)) throw std::domain_error("HalfPlanePoint: Im z must be positive");
}

HalfPlanePoint HalfPlanePoint::imaginary(const BigFloat& y) { return HalfPlanePoint(BigComplex(BigFloat(y.precision()), y)); }

BigComplex HalfPlanePoint::q(Precision p) const {
  const BigFloat two_pi = mpnum::pi(p) * 2L;
  return exp(times_i(z_ * two_pi));
}

EtaValue eta_eval(const BigComplex& tau, Precision p, const EvalOptions& opt) {
  const Precision w = p + 32;
  BigComplex t(tau.re().at(w), tau.im().at(w));
  if (!(t.im() > 0L)) throw std::domain_error("eta_eval: Im tau must be positive");
  if (!opt.extra_inversion) return eta_reduced(t, w, 0);
  const EtaValue inner = eta_series(-inv(t), w);
  EtaValue out;
  out.value = inner.value / sqrt(BigComplex(t.im(), -t.re()));
  out.logderiv = inner.logderiv / (t * t) - inv(t * 2L);
  out.inversions = 1;
  return out;
}

BigComplex eval_modular(ModularObject obj, const HalfPlanePoint& z, Precision p, const EvalOptions& opt) {
  const BigComplex v = combine(obj, eta_set(z.z(), p, opt));
  return BigComplex(v.re().at(p), v.im().at(p));
}

BigComplex alpha3_derivative(const HalfPlanePoint& z, Precision p) {
  const EtaValue e1 = eta_eval(z.z(), p), e3 = eta_eval(z.z() * 3L, p);
  const Precision w = e1.value.precision();
  const BigComplex r = pow(e1.value / e3.value, 12) / BigFloat(27L, w);
  const BigComplex a = inv(r + cx(BigFloat(1L, w)));
  // d/dz log r = 12 g(z) - 36 g(3z)
  const BigComplex dlog = e1.logderiv * 12L - e3.logderiv * 36L;
  const BigComplex d = -(a * a * r * dlog);
  return BigComplex(d.re().at(p), d.im().at(p));
}

BigComplex apply_w6(const BigComplex& z) { return -inv(z * 6L); }

BigComplex apply_w3(const BigComplex& z) {
  const Precision p = z.precision();
  return (z * 3L - cx(BigFloat(2L, p))) / (z * 6L - cx(BigFloat(3L, p)));
}

BigComplex phi66(const HalfPlanePoint& z, Precision p) {
  const EtaSet s = eta_set(z.z(), p, {});
  return phi_part(combine(ModularObject::F66, s), combine(ModularObject::X63, s));
}

BigComplex chi66(const HalfPlanePoint& z, Precision p) {
  const EtaSet s = eta_set(z.z(), p, {});
  return chi_part(combine(ModularObject::F66, s), combine(ModularObject::X63, s));
}

BigComplex phi_plus_chi(const HalfPlanePoint& z, Precision p) {
  const EtaSet s = eta_set(z.z(), p, {});
  const BigComplex f = combine(ModularObject::F66, s), x = combine(ModularObject::X63, s);
  return phi_part(f, x) + chi_part(f, x);
}

BigFloat f66_fricke_selftest(Precision p) {
  BigFloat worst(0L, p);
  for (const char* ys : {"0.3", "0.5", "0.8"}) {
    const BigFloat y(ys, p + 32);
    const HalfPlanePoint z = HalfPlanePoint::imaginary(y);
    const BigComplex lhs = eval_modular(ModularObject::F66, HalfPlanePoint(apply_w6(z.z())), p + 32);
    const BigComplex rhs = eval_modular(ModularObject::F66, z, p + 32) * (pow(z.z(), 6) * (-216L));
    worst = max(worst, abs(lhs - rhs) / abs(rhs));
  }
  return worst.at(p);
}

namespace {

int coefficient_order(Precision w) {
  // terms decay like n^3 e^{-2 pi n / sqrt 6}
  const double need = static_cast<double>(w.bits) * std::log(2.0) / (2 * M_PI / std::sqrt(6.0)) + 30;
  const int rounded = static_cast<int>(std::ceil(need / 50.0)) * 50;
  return std::max(200, rounded);
}

/// Gamma(s, x) for integer s >= 1.
BigFloat upper_gamma(int s, const BigFloat& x) {
  const Precision p = x.precision();
  BigFloat sum(0L, p), term(1L, p), fact(1L, p);
  for (int k = 0; k < s; ++k) {
    if (k > 0) term = term * x / static_cast<long>(k);
    sum += term;
  }
  for (int k = 2; k < s; ++k) fact *= static_cast<long>(k);
  return fact * exp(-x) * sum;
}

}  // namespace

BigFloat lvalue_f66(int s, Precision p) {
  if (s < 1 || s > 3) throw std::invalid_argument("lvalue_f66: s in {1, 2, 3}");
  static std::mutex mu;
  static std::map<long, bool> tested;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (!tested[p.bits]) {
      const BigFloat dev = f66_fricke_selftest(p);
      if (!(dev < ldexp(BigFloat(1L, p), -(p.bits - 32))))
        throw std::logic_error("lvalue_f66: weight-6 transformation self-test failed, deviation " + dev.to_string(6));
      tested[p.bits] = true;
    }
  }
  const Precision w = p + 32;
  const int order = coefficient_order(w);
  const QSeries& f = modular_objects(order).f66;
  const BigFloat pi = mpnum::pi(w), two_pi = pi * 2L;
  const BigFloat y0 = BigFloat(1L, w) / sqrt(BigFloat(6L, w));

  BigFloat upper(0L, w), lower(0L, w), last(0L, w);
  for (int k = 0; k < f.order(); ++k) {
    const long n = f.lead().get_num().get_si() + k;
    if (f.coeff(k) == 0) continue;
    const BigFloat a(f.coeff(k), w);
    const BigFloat nn(n, w);
    const BigFloat x = two_pi * nn * y0;
    const BigFloat tu = a * upper_gamma(s, x) / pow(nn, s);
    const BigFloat tl = a * upper_gamma(6 - s, x) / pow(two_pi * nn, 6 - s);
    upper += tu;
    lower += tl;
    last = abs(tu);
  }
  lower *= pow(two_pi / 6L, s) * 216L;
  BigFloat gs(1L, w);
  for (int k = 2; k < s; ++k) gs *= static_cast<long>(k);
  const BigFloat total = (upper + lower) / gs;
  if (!(last < ldexp(abs(total), -(w.bits - 8))))
    throw std::logic_error("lvalue_f66: q-expansion truncated too early");
  return total.at(p);
}

// ------------------------------------------------------------------ axis integrals

const AxisIntegrals& axis_integrals(Precision p) {
  static std::mutex mu;
  static std::map<long, std::unique_ptr<AxisIntegrals>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[p.bits];
  if (slot) return *slot;

  const Precision w = p + 32;
  const BigFloat y0 = BigFloat(1L, w) / sqrt(BigFloat(6L, w));
  const mpnum::DERule rule = mpnum::DERule::half_line(y0, 2 * M_PI, w);
  mpnum::QuadOptions opt;
  opt.tol_bits = p.bits;
  // components: weight k = 0..2, f moments k = 0..2, |weight| k = 0..2
  const mpnum::QuadResult r = mpnum::integrate(
      rule, 9,
      [&](const mpnum::QuadNode& node, std::span<BigFloat> out) {
        const BigFloat& t = node.t;
        const EtaSet s = eta_set(BigComplex(BigFloat(w), t), w, {});
        const BigFloat f_up = combine(ModularObject::F66, s).re();
        const BigFloat x_up = combine(ModularObject::X63, s).re();
        // y = 1/(6t): X -> 1/(64 X), f -> 216 t^6 f, dy = dt/(6 t^2)
        const BigFloat y_lo = BigFloat(1L, w) / (t * 6L);
        const BigFloat f_lo = f_up * pow(t, 6) * 216L;
        const BigFloat x_lo = BigFloat(1L, w) / (x_up * 64L);
        const BigFloat jac = BigFloat(1L, w) / (t * t * 6L);
        const auto [g_up, m_up] = phi_chi_real(f_up, x_up);
        auto [g_lo, m_lo] = phi_chi_real(f_lo, x_lo);
        g_lo *= jac;
        m_lo *= jac;
        const BigFloat fl = f_lo * jac;
        BigFloat yu(1L, w), yl(1L, w);
        for (int k = 0; k < 3; ++k) {
          out[static_cast<size_t>(k)] = g_up * yu + g_lo * yl;
          out[static_cast<size_t>(3 + k)] = f_up * yu + fl * yl;
          out[static_cast<size_t>(6 + k)] = m_up * yu + m_lo * yl;
          yu *= t;
          yl *= y_lo;
        }
      },
      opt);

  auto res = std::make_unique<AxisIntegrals>();
  res->converged = r.converged;
  res->error = BigFloat(0L, p);
  for (const auto& e : r.errors) res->error = max(res->error, e.at(p));
  for (int k = 0; k < 3; ++k) {
    const BigFloat& g = r.values[static_cast<size_t>(k)];
    // int (phi+chi)(iy) (iy)^k i dy = i^{k+1} int (phi+chi)(iy) y^k dy
    BigComplex v(p);
    switch (k) {
      case 0: v = BigComplex(BigFloat(p), g.at(p)); break;
      case 1: v = BigComplex(-g.at(p), BigFloat(p)); break;
      default: v = BigComplex(BigFloat(p), -g.at(p)); break;
    }
    res->weight[static_cast<size_t>(k)] = v;
    res->f_moment[static_cast<size_t>(k)] = r.values[static_cast<size_t>(3 + k)].at(p);
    res->weight_scale[static_cast<size_t>(k)] = r.values[static_cast<size_t>(6 + k)].at(p);
  }
  slot = std::move(res);
  return *slot;
}

BigComplex modular_weight_integral(int k, Precision p) {
  if (k < 0 || k > 2) throw std::invalid_argument("modular_weight_integral: k in {0, 1, 2}");
  return axis_integrals(p).weight[static_cast<size_t>(k)];
}

// ------------------------------------------------------------------ Legendre P_{-1/3}

BigFloat hyp_third_series(const BigFloat& zeta, Precision p) {
  if (zeta < 0L || zeta > BigFloat(0.5, p)) throw std::domain_error("hyp_third_series: 0 <= zeta <= 1/2");
  const Precision w = p + 16;
  const BigFloat z = zeta.at(w);
  const BigFloat eps = ldexp(BigFloat(1L, w), -(w.bits + 4));
  BigFloat term(1L, w), sum(1L, w);
  for (long n = 0; n < 100000; ++n) {
    // (n + 1/3)(n + 2/3)/(n + 1)^2
    term = term * z * ((3 * n + 1) * (3 * n + 2)) / (9 * (n + 1) * (n + 1));
    sum += term;
    if (abs(term) < eps) break;
  }
  return sum.at(p);
}

BigFloat hyp_third_near_one(const BigFloat& eta, Precision p) {
  if (!(eta > 0L) || eta > BigFloat(0.5, p)) throw std::domain_error("hyp_third_near_one: 0 < eta <= 1/2");
  const Precision w = p + 24;
  const BigFloat e = eta.at(w);
  const BigFloat third = BigFloat(1L, w) / 3L;
  // h_n = 2 psi(n+1) - psi(n+1/3) - psi(n+2/3)
  BigFloat h = mpnum::digamma(BigFloat(1L, w)) * 2L - mpnum::digamma(third) - mpnum::digamma(third * 2L);
  const BigFloat le = log(e);
  const BigFloat eps = ldexp(BigFloat(1L, w), -(w.bits + 4));
  BigFloat c(1L, w), en(1L, w), sum(0L, w);
  for (long n = 0; n < 100000; ++n) {
    const BigFloat term = c * (h - le) * en;
    sum += term;
    if (n > 2 && abs(term) < eps * abs(sum)) break;
    c = c * ((3 * n + 1) * (3 * n + 2)) / (9 * (n + 1) * (n + 1));
    h += BigFloat(2L, w) / (n + 1) - BigFloat(3L, w) / (3 * n + 1) - BigFloat(3L, w) / (3 * n + 2);
    en *= e;
  }
  // Gamma(1)/(Gamma(1/3) Gamma(2/3)) = sqrt(3)/(2 pi)
  return (sum * sqrt(BigFloat(3L, w)) / (mpnum::pi(w) * 2L)).at(p);
}

BigFloat legendre_Pm13(const BigFloat& x, Precision p) {
  if (!(x > -1L) || x > 1L) throw std::domain_error("legendre_Pm13: -1 < x <= 1");
  const Precision w = p + 8;
  const BigFloat zeta = (BigFloat(1L, w) - x.at(w)) / 2L;
  if (zeta <= BigFloat(0.5, w)) return hyp_third_series(zeta, p);
  return hyp_third_near_one((BigFloat(1L, w) + x.at(w)) / 2L, p);
}

BigFloat legendre_moment(Precision p) {
  // int_{-1}^1 x P(x)^3 P(-x) dx = int_0^1 x P(x) P(-x) [P(x)^2 - P(-x)^2] dx; with x = 1 - s,
  // P(x) = F(s/2) and P(-x) = F(1 - s/2), both arguments exact in s.
  const Precision w = p + 16;
  const mpnum::QuadResult r = mpnum::integrate_panel(
      [&](const BigFloat& s) {
        const BigFloat half = s / 2L;
        const BigFloat a = hyp_third_series(half, w);
        const BigFloat b = hyp_third_near_one(half, w);
        return (BigFloat(1L, s.precision()) - s) * a * b * (a * a - b * b);
      },
      BigFloat(0L, w), BigFloat(1L, w), w);
  return r.values[0].at(p);
}

// ------------------------------------------------------------------ base change

namespace {

/// (F(alpha), F(1 - alpha)) with both arguments formed without cancellation.
std::pair<BigFloat, BigFloat> hyp_pair(const BigFloat& alpha, Precision p) {
  const Precision w = alpha.precision();
  const BigFloat half(0.5, w);
  if (alpha <= half) return {hyp_third_series(alpha, p), hyp_third_near_one(alpha, p)};
  const BigFloat beta = BigFloat(1L, w) - alpha;
  return {hyp_third_near_one(beta, p), hyp_third_series(beta, p)};
}

cli::Certificate complex_certificate(std::string id, const BigComplex& lhs, const BigComplex& rhs, cli::Tolerance tol,
                                     Precision p, std::vector<std::string> prov) {
  cli::Certificate c = cli::numeric_certificate(std::move(id), lhs.re(), rhs.re(), tol, p.bits, 0, std::move(prov));
  const BigFloat r = abs(lhs - rhs) / abs(rhs);
  c.residual = r.to_string(cli::kResidualDigits);
  c.relative = true;
  c.status = (r.is_finite() && r < BigFloat(tol.value, p)) ? "pass" : "fail";
  c.note = "complex residual; Im lhs " + lhs.im().to_string(cli::kResidualDigits) + ", Im rhs " +
           rhs.im().to_string(cli::kResidualDigits);
  return c;
}

}  // namespace

std::vector<cli::Certificate> cz_basechange_check(const BigFloat& y, Precision p, cli::Tolerance tol) {
  if (!(y > 0L)) throw std::domain_error("cz_basechange_check: y > 0");
  const Precision w = p + 32;
  const BigFloat yw = y.at(w);
  const std::string tag = ".y=" + y.to_string(4);
  const HalfPlanePoint z = HalfPlanePoint::imaginary(yw);
  const HalfPlanePoint z2 = HalfPlanePoint::imaginary(yw * 2L);
  const BigFloat pi = mpnum::pi(w);
  const BigComplex pi_i(BigFloat(w), pi);

  std::vector<cli::Certificate> out;
  const BigFloat alpha = eval_modular(ModularObject::Alpha3, z, w).re();
  const auto [f_a, f_1ma] = hyp_pair(alpha, w);  // P(1 - 2 alpha), P(2 alpha - 1)
  const BigFloat y_pred = f_1ma / (sqrt(BigFloat(3L, w)) * f_a);
  out.push_back(cli::numeric_certificate("basechange.z_alpha3" + tag, y_pred.at(p), y, tol, p.bits, 0,
                                         {"imaginary part of z from P_{-1/3} at +-(1 - 2 alpha3)"}));

  const BigComplex da = alpha3_derivative(z, w);
  const BigComplex lhs_phi = phi66(z, w) * 1296L;
  const BigComplex rhs_phi = cx(pow(f_a, 4) * (BigFloat(1L, w) - alpha * 2L)) * da / pi_i;
  out.push_back(complex_certificate("basechange.phi66" + tag, lhs_phi, rhs_phi, tol, p,
                                    {"2^4 3^4 phi66 from P_{-1/3}(1 - 2 alpha3) and d alpha3/dz"}));

  const BigFloat alpha2 = eval_modular(ModularObject::Alpha3, z2, w).re();
  const BigFloat f_a2 = hyp_pair(alpha2, w).first;
  const BigComplex da2 = alpha3_derivative(z2, w) * 2L;
  const BigComplex lhs_chi =
      eval_modular(ModularObject::F66, z, w) * BigFloat(13.5, w) + chi66(z, w) * 1296L;
  const BigComplex rhs_chi = -(cx(pow(f_a2, 4) * (BigFloat(1L, w) - alpha2 * 2L)) * da2 / pi_i);
  out.push_back(complex_certificate("basechange.chi66" + tag, lhs_chi, rhs_chi, tol, p,
                                    {"27/2 f66 + 2^4 3^4 chi66 from alpha3(2z)"}));
  return out;
}

}  // namespace bmlab::modular
