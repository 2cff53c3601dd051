#include "bmlab/mpnum/oscillatory.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "bmlab/mpnum/constants.hpp"

namespace bmlab::mpnum {

namespace {

BigFloat eval_kind(BesselKind kind, const BigFloat& t, Precision p) {
  BigFloat r(p);
  switch (kind) {
    case BesselKind::J0: mpfr_j0(r.raw(), t.raw(), MPFR_RNDN); break;
    case BesselKind::J1: mpfr_j1(r.raw(), t.raw(), MPFR_RNDN); break;
    case BesselKind::Y0: mpfr_y0(r.raw(), t.raw(), MPFR_RNDN); break;
    default: throw std::invalid_argument("bessel_zero: kind must be J0, J1 or Y0");
  }
  return r;
}

BigFloat eval_derivative(BesselKind kind, const BigFloat& t, Precision p) {
  BigFloat r(p);
  switch (kind) {
    case BesselKind::J0:
      mpfr_j1(r.raw(), t.raw(), MPFR_RNDN);
      return -r;
    case BesselKind::Y0:
      mpfr_y1(r.raw(), t.raw(), MPFR_RNDN);
      return -r;
    case BesselKind::J1: {
      mpfr_j0(r.raw(), t.raw(), MPFR_RNDN);
      return r - eval_kind(BesselKind::J1, t, p) / t;
    }
    default: throw std::invalid_argument("bessel_zero: kind must be J0, J1 or Y0");
  }
}

std::mutex g_ref_mu;
std::map<long, std::shared_ptr<DERule>> g_ref_rules;

const DERule& unit_rule(Precision p) {
  std::lock_guard<std::mutex> lock(g_ref_mu);
  auto it = g_ref_rules.find(p.bits);
  if (it == g_ref_rules.end())
    it = g_ref_rules.emplace(p.bits, std::make_shared<DERule>(DERule::finite(BigFloat(0L, p), BigFloat(1L, p), p))).first;
  return *it->second;
}

}  // namespace

BigFloat bessel_zero(BesselKind kind, long k, Precision p) {
  if (k < 1) throw std::invalid_argument("bessel_zero: k must be >= 1");
  const double nu = kind == BesselKind::J1 ? 1.0 : 0.0;
  const double shift = kind == BesselKind::Y0 ? 0.75 : 0.25;
  const double beta = (static_cast<double>(k) + nu / 2 - shift) * M_PI;
  const double mu = 4 * nu * nu;
  const double eb = 8 * beta;
  const double guess = beta - (mu - 1) / eb - 4 * (mu - 1) * (7 * mu - 31) / (3 * eb * eb * eb);
  const Precision w = p + 16;
  BigFloat z(guess, w);
  for (int it = 0; it < 60; ++it) {
    const BigFloat step = eval_kind(kind, z, w) / eval_derivative(kind, z, w);
    z -= step;
    if (step.is_zero() || step.exponent2() < z.exponent2() - w.bits + 4) break;
  }
  return z.at(p);
}

BigFloat levin_u(const std::vector<BigFloat>& s, int k) {
  const long n = static_cast<long>(s.size()) - 1;
  if (k < 1 || n < k + 1) throw std::invalid_argument("levin_u: need at least k + 2 partial sums");
  const Precision w = s.back().precision() + 8;
  const long n0 = n - k;
  const long beta = 1;
  BigFloat num(w), den(w);
  BigFloat binom(1L, w);
  for (long j = 0; j <= k; ++j) {
    const long idx = n0 + j;
    const BigFloat a = s[static_cast<size_t>(idx)].at(w) - s[static_cast<size_t>(idx - 1)];
    if (a.is_zero()) throw std::domain_error("levin_u: zero term");
    const BigFloat omega = a * (beta + idx);
    // ((beta + idx) / (beta + n))^(k-1)
    const BigFloat ratio = pow(BigFloat(beta + idx, w) / BigFloat(beta + n, w), k - 1);
    BigFloat c = binom * ratio / omega;
    if ((j & 1) != 0) c = -c;
    num += c * s[static_cast<size_t>(idx)];
    den += c;
    binom *= (k - j);
    binom /= (j + 1);
  }
  return (num / den).at(s.back().precision());
}

QuadResult integrate_panel(const ScalarFunction& f, const BigFloat& a, const BigFloat& b, Precision p,
                           const QuadOptions& opt) {
  const DERule& ref = unit_rule(p);
  const Precision w = p + 32;
  const BigFloat aw = a.at(w), bw = b.at(w);
  const BigFloat len = bw - aw;
  return integrate(
      ref, 1,
      [&](const QuadNode& node, std::span<BigFloat> out) {
        // t <= 1/2 on the reference rule exactly when from_a <= to_b
        const bool left = node.from_a <= node.to_b;
        const BigFloat t = left ? aw + len * node.from_a : bw - len * node.to_b;
        out[0] = f(t) * len;
      },
      opt);
}

OscillatoryResult integrate_oscillatory(const ScalarFunction& f, BesselKind kernel, const BigFloat& x, Precision p,
                                        const OscillatoryOptions& opt) {
  if (!(x > 0L)) throw std::domain_error("integrate_oscillatory: kernel scale must be positive");
  const Precision w = p + 16;
  const long tol = std::min(opt.tol_bits, p.bits - 24);
  QuadOptions qopt = opt.panel;
  qopt.tol_bits = tol + 8;

  OscillatoryResult res{BigFloat(w), BigFloat(w)};
  BigFloat sum(w), quad_err(w);
  std::vector<BigFloat> seq;  // partial sums at kernel zeros
  std::vector<BigFloat> recent;

  auto add_panel = [&](const BigFloat& lo, const BigFloat& hi) {
    if (!sum.is_zero()) qopt.abs_tol = ldexp(abs(sum), -(tol + 8));
    const QuadResult q = integrate_panel(f, lo, hi, p, qopt);
    sum += q.values[0];
    quad_err += q.errors[0];
    res.evaluations += q.evaluations;
    ++res.panels;
    recent.push_back(abs(q.values[0]));
    if (recent.size() > 3) recent.erase(recent.begin());
  };

  BigFloat z = bessel_zero(kernel, 1, w) / x;
  BigFloat lo(0L, w);
  for (BigFloat g(1L, w); g < z; g *= 2L) {
    add_panel(lo, g);
    lo = g;
  }
  add_panel(lo, z);
  seq.push_back(sum);

  BigFloat prev_levin(w), prev_diff(w);
  bool have_levin = false;
  int agreements = 0;
  for (long k = 2; res.panels < opt.max_panels; ++k) {
    const BigFloat next = bessel_zero(kernel, k, w) / x;
    add_panel(z, next);
    z = next;
    seq.push_back(sum);

    const BigFloat thresh = ldexp(abs(sum), -tol);
    if (z.to_double() >= opt.negligible_after && recent.size() == 3 && !sum.is_zero()) {
      bool small = true;
      for (const auto& r : recent) small = small && r <= thresh;
      if (small) {
        res.value = sum;
        res.error = recent[0] + recent[1] + recent[2] + quad_err;
        res.converged = true;
        return res;
      }
    }
    if (static_cast<long>(seq.size()) >= opt.levin_terms + 3) {
      const BigFloat est = levin_u(seq, opt.levin_terms);
      if (have_levin) {
        const BigFloat diff = abs(est - prev_levin);
        agreements = diff <= ldexp(abs(est), -tol) ? agreements + 1 : 0;
        res.value = est;
        res.error = max(diff, prev_diff) + quad_err;
        res.accelerated = true;
        prev_diff = diff;
        if (agreements >= 2) {
          res.converged = true;
          return res;
        }
      }
      prev_levin = est;
      have_levin = true;
    }
  }
  if (!have_levin) {
    res.value = sum;
    res.error = recent.empty() ? quad_err : recent.back() * static_cast<long>(res.panels) + quad_err;
  }
  return res;
}

}  // namespace bmlab::mpnum
