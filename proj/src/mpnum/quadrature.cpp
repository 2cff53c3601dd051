#include "bmlab/mpnum/quadrature.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bmlab/mpnum/constants.hpp"

namespace bmlab::mpnum {

namespace {
std::atomic<ExecPolicy> g_policy{ExecPolicy::Parallel};
constexpr long kGuardBits = 32;
}  // namespace

void set_default_exec_policy(ExecPolicy p) { g_policy = p; }
ExecPolicy default_exec_policy() { return g_policy.load(); }

void for_each_index(size_t n, ExecPolicy policy, const std::function<void(size_t)>& fn) {
  if (policy == ExecPolicy::Serial || n < 2) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    try {
      fn(static_cast<size_t>(i));
    } catch (...) {
#pragma omp critical(bmlab_for_each_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

// ---------------------------------------------------------------- DERule

DERule::DERule(BigFloat a, BigFloat b, bool half_line, double decay, Precision p)
    : a_(std::move(a)), b_(std::move(b)), half_line_(half_line), decay_(decay), prec_(p) {
  const double ln2 = std::log(2.0);
  const double wbits = static_cast<double>(p.bits + kGuardBits);
  if (half_line_) {
    tau_lo_ = -std::log(wbits * ln2 + 2.0 * std::log(wbits * ln2) + 5.0);
    tau_hi_ = std::log((wbits * ln2 + 40.0) / decay_) + 0.5;
  } else {
    const double s_max = (wbits + 16.0) * ln2 / 2.0 + 2.0;
    tau_hi_ = std::asinh(2.0 * s_max / M_PI);
    tau_lo_ = -tau_hi_;
  }
}

DERule DERule::finite(const BigFloat& a, const BigFloat& b, Precision p) {
  if (!(a < b)) throw std::invalid_argument("DERule::finite: need a < b");
  const Precision w = p + kGuardBits;
  return DERule(a.at(w), b.at(w), false, 0.0, p);
}

DERule DERule::half_line(const BigFloat& a, double decay, Precision p) {
  if (!(decay > 0)) throw std::invalid_argument("DERule::half_line: decay must be positive");
  const Precision w = p + kGuardBits;
  return DERule(a.at(w), BigFloat(w), true, decay, p);
}

QuadNode DERule::make_node(const BigFloat& tau) const {
  const Precision w = prec_ + kGuardBits;
  if (half_line_) {
    // t - a = exp(tau - exp(-tau)), dt/dtau = (t - a)(1 + exp(-tau))
    const BigFloat em = exp(-tau);
    BigFloat d = exp(tau - em);
    BigFloat weight = d * (em + 1L);
    BigFloat inf(w);
    mpfr_set_inf(inf.raw(), 1);
    return {a_ + d, d, inf, weight};
  }
  const BigFloat half_pi = pi(w) / 2;
  const BigFloat s = half_pi * sinh(tau);
  const BigFloat len = b_ - a_;
  const BigFloat e2 = exp(s * 2L);
  const BigFloat from_a = len * e2 / (e2 + 1L);  // len / (1 + e^{-2s})
  const BigFloat to_b = len / (e2 + 1L);
  const BigFloat ch = cosh(s);
  BigFloat weight = len / 2 * half_pi * cosh(tau) / (ch * ch);
  BigFloat t = tau.sign() <= 0 ? a_ + from_a : b_ - to_b;
  return {t, from_a, to_b, weight};
}

const std::vector<QuadNode>& DERule::level_nodes(int level) const {
  std::lock_guard<std::mutex> lock(*mu_);
  const Precision w = prec_ + kGuardBits;
  while (static_cast<int>(levels_.size()) <= level) {
    const int L = static_cast<int>(levels_.size());
    const double h = std::ldexp(1.0, -L);
    std::vector<QuadNode> nodes;
    const long k_lo = static_cast<long>(std::ceil(tau_lo_ / h));
    const long k_hi = static_cast<long>(std::floor(tau_hi_ / h));
    for (long k = k_lo; k <= k_hi; ++k) {
      if (L > 0 && (k & 1) == 0) continue;
      const BigFloat tau = ldexp(BigFloat(k, w), -L);
      nodes.push_back(make_node(tau));
    }
    levels_.push_back(std::move(nodes));
  }
  return levels_[static_cast<size_t>(level)];
}

// ---------------------------------------------------------------- integration driver

namespace {

using LevelEval = std::function<void(int level, std::vector<BigFloat>& sum, std::vector<BigFloat>& abs_sum, long& count)>;

QuadResult drive(Precision p, size_t components, const QuadOptions& opt, const LevelEval& eval_level) {
  const Precision w = p + kGuardBits;
  const long tol_bits = opt.tol_bits > 0 ? opt.tol_bits : p.bits - 20;
  QuadResult res;
  std::vector<BigFloat> total(components, BigFloat(w)), total_abs(components, BigFloat(w));
  std::vector<BigFloat> prev(components, BigFloat(w));
  for (int L = 0; L <= opt.max_level; ++L) {
    std::vector<BigFloat> sum(components, BigFloat(w)), abs_sum(components, BigFloat(w));
    long count = 0;
    eval_level(L, sum, abs_sum, count);
    res.evaluations += count;
    const BigFloat h = ldexp(BigFloat(1L, w), -L);
    std::vector<BigFloat> cur(components, BigFloat(w));
    bool ok = L >= opt.min_level;
    res.errors.assign(components, BigFloat(w));
    for (size_t c = 0; c < components; ++c) {
      total[c] += sum[c];
      total_abs[c] += abs_sum[c];
      cur[c] = total[c] * h;
      const BigFloat scale = total_abs[c] * h;
      const BigFloat diff = abs(cur[c] - prev[c]);
      const BigFloat floor_err = ldexp(scale, -(p.bits - 8));
      res.errors[c] = max(diff, floor_err);
      const bool abs_ok = opt.abs_tol && diff <= *opt.abs_tol;
      if (L == 0 || (diff > ldexp(scale, -tol_bits) && !abs_ok)) ok = false;
    }
    prev = cur;
    res.levels = L;
    if (ok) {
      res.converged = true;
      break;
    }
  }
  res.values = std::move(prev);
  return res;
}

}  // namespace

QuadResult integrate(const DERule& rule, size_t components, const NodeFunction& f, const QuadOptions& opt) {
  const Precision w = rule.precision() + kGuardBits;
  return drive(rule.precision(), components, opt,
               [&](int L, std::vector<BigFloat>& sum, std::vector<BigFloat>& abs_sum, long& count) {
                 const auto& nodes = rule.level_nodes(L);
                 std::vector<std::vector<BigFloat>> vals(nodes.size(), std::vector<BigFloat>(components, BigFloat(w)));
                 for_each_index(nodes.size(), opt.policy, [&](size_t i) { f(nodes[i], vals[i]); });
                 for (size_t i = 0; i < nodes.size(); ++i)
                   for (size_t c = 0; c < components; ++c) {
                     if (!vals[i][c].is_finite()) throw std::domain_error("integrate: non-finite integrand value");
                     const BigFloat wf = nodes[i].weight * vals[i][c];
                     sum[c] += wf;
                     abs_sum[c] += abs(wf);
                   }
                 count += static_cast<long>(nodes.size());
               });
}

// ---------------------------------------------------------------- Bessel tables

namespace {

std::mutex g_table_mu;
std::map<std::tuple<int, long, long, long>, std::shared_ptr<BesselTable>> g_tables;

std::shared_ptr<BesselTable> cached(int kind, long x, long y, Precision p, const std::function<DERule()>& make) {
  std::lock_guard<std::mutex> lock(g_table_mu);
  auto key = std::make_tuple(kind, x, y, p.bits);
  auto it = g_tables.find(key);
  if (it != g_tables.end()) return it->second;
  auto t = std::make_shared<BesselTable>(make());
  g_tables.emplace(key, t);
  return t;
}

}  // namespace

std::shared_ptr<BesselTable> BesselTable::unit(Precision p) {
  return cached(0, 0, 1, p, [&] { return DERule::finite(BigFloat(0L, p), BigFloat(1L, p), p); });
}

std::shared_ptr<BesselTable> BesselTable::tail(double decay, Precision p) {
  if (!(decay > 0)) throw std::invalid_argument("BesselTable::tail: decay must be positive");
  int e = -24;
  while (e < 6 && std::ldexp(1.0, e + 1) <= decay) ++e;
  const double c = std::ldexp(1.0, e);
  return cached(1, e, 0, p, [&] { return DERule::half_line(BigFloat(1L, p), c, p); });
}

std::shared_ptr<BesselTable> BesselTable::finite(long a, long b, Precision p) {
  return cached(2, a, b, p, [&] { return DERule::finite(BigFloat(a, p), BigFloat(b, p), p); });
}

void BesselTable::clear_cache() {
  std::lock_guard<std::mutex> lock(g_table_mu);
  g_tables.clear();
}

const std::vector<ModifiedBesselSet>& BesselTable::level_samples(int level, ExecPolicy policy) const {
  std::lock_guard<std::mutex> lock(mu_);
  const Precision w = rule_.precision() + kGuardBits;
  while (static_cast<int>(samples_.size()) <= level) {
    const auto& nodes = rule_.level_nodes(static_cast<int>(samples_.size()));
    std::vector<ModifiedBesselSet> s(nodes.size(), ModifiedBesselSet{BigFloat(w), BigFloat(w), BigFloat(w), BigFloat(w)});
    for_each_index(nodes.size(), policy, [&](size_t i) { s[i] = modified_bessel_all(nodes[i].t, w); });
    samples_.push_back(std::move(s));
  }
  return samples_[static_cast<size_t>(level)];
}

QuadResult integrate(const BesselTable& table, size_t components, const BesselNodeFunction& f, const QuadOptions& opt) {
  const DERule& rule = table.rule();
  const Precision w = rule.precision() + kGuardBits;
  return drive(rule.precision(), components, opt,
               [&](int L, std::vector<BigFloat>& sum, std::vector<BigFloat>& abs_sum, long& count) {
                 const auto& nodes = rule.level_nodes(L);
                 const auto& samples = table.level_samples(L, opt.policy);
                 std::vector<std::vector<BigFloat>> vals(nodes.size(), std::vector<BigFloat>(components, BigFloat(w)));
                 for_each_index(nodes.size(), opt.policy, [&](size_t i) { f(nodes[i], samples[i], vals[i]); });
                 for (size_t i = 0; i < nodes.size(); ++i)
                   for (size_t c = 0; c < components; ++c) {
                     if (!vals[i][c].is_finite()) throw std::domain_error("integrate: non-finite integrand value");
                     const BigFloat wf = nodes[i].weight * vals[i][c];
                     sum[c] += wf;
                     abs_sum[c] += abs(wf);
                   }
                 count += static_cast<long>(nodes.size());
               });
}

}  // namespace bmlab::mpnum
