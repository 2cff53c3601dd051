#include "bmlab/exact/log_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace bmlab::exact {

LogSeries::LogSeries(std::string var, int low, int order) : var_(std::move(var)), low_(low), order_(std::max(order, low)) {}

LogSeries LogSeries::from_power_series(std::string var, int low, int order, const std::vector<BigRational>& coeffs) {
  LogSeries s(std::move(var), low, order);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    const int e = low + static_cast<int>(k);
    if (e >= s.order_) break;
    s.set_coeff(0, e, coeffs[k]);
  }
  return s;
}

BigRational LogSeries::coeff(int log_power, int exponent) const {
  if (log_power < 0 || log_power > log_degree() || exponent < low_ || exponent >= order_) return 0;
  return c_[static_cast<size_t>(log_power)][static_cast<size_t>(exponent - low_)];
}

void LogSeries::set_coeff(int log_power, int exponent, const BigRational& c) {
  if (exponent < low_ || exponent >= order_) throw std::out_of_range("LogSeries::set_coeff: exponent outside valid range");
  if (log_power < 0) throw std::out_of_range("LogSeries::set_coeff: negative log power");
  while (log_degree() < log_power) c_.emplace_back(width());
  c_[static_cast<size_t>(log_power)][static_cast<size_t>(exponent - low_)] = c;
  trim_logs();
}

void LogSeries::trim_logs() {
  while (!c_.empty() && std::all_of(c_.back().begin(), c_.back().end(), [](const BigRational& q) { return sgn(q) == 0; }))
    c_.pop_back();
}

bool LogSeries::is_zero() const { return c_.empty(); }

LogSeries LogSeries::derivative() const {
  LogSeries d(var_, low_ - 1, order_ - 1);
  d.c_.assign(c_.size(), std::vector<BigRational>(d.width()));
  for (size_t l = 0; l < c_.size(); ++l) {
    for (int e = low_; e < order_; ++e) {
      const BigRational& c = c_[l][static_cast<size_t>(e - low_)];
      if (sgn(c) == 0) continue;
      // d/dt t^e log^l = e t^{e-1} log^l + l t^{e-1} log^{l-1}
      if (e != 0) d.c_[l][static_cast<size_t>(e - low_)] += c * e;
      if (l > 0) d.c_[l - 1][static_cast<size_t>(e - low_)] += c * static_cast<long>(l);
    }
  }
  d.trim_logs();
  return d;
}

LogSeries LogSeries::times(const LaurentPoly& f) const {
  if (f.is_zero()) return LogSeries(var_, low_, order_);
  const int shift = f.min_exponent();
  LogSeries r(var_, low_ + shift, order_ + shift);
  r.c_.assign(c_.size(), std::vector<BigRational>(r.width()));
  for (size_t l = 0; l < c_.size(); ++l)
    for (const auto& [k, a] : f.terms())
      for (int e = low_; e < order_ && e + k < r.order_; ++e) {
        const BigRational& c = c_[l][static_cast<size_t>(e - low_)];
        if (sgn(c) != 0) r.c_[l][static_cast<size_t>(e + k - r.low_)] += a * c;
      }
  r.trim_logs();
  return r;
}

LogSeries LogSeries::truncated(int order) const {
  LogSeries r(var_, low_, std::min(order, order_));
  r.c_.assign(c_.size(), std::vector<BigRational>(r.width()));
  for (size_t l = 0; l < c_.size(); ++l)
    std::copy_n(c_[l].begin(), r.width(), r.c_[l].begin());
  r.trim_logs();
  return r;
}

LogSeries LogSeries::times_log(int power) const {
  LogSeries r = *this;
  if (r.c_.empty()) return r;
  r.c_.insert(r.c_.begin(), static_cast<size_t>(power), std::vector<BigRational>(width()));
  return r;
}

LogSeries& LogSeries::operator+=(const LogSeries& o) {
  if (var_ != o.var_) throw std::invalid_argument("LogSeries: variable mismatch");
  LogSeries r(var_, std::min(low_, o.low_), std::min(order_, o.order_));
  const size_t logs = std::max(c_.size(), o.c_.size());
  r.c_.assign(logs, std::vector<BigRational>(r.width()));
  for (size_t l = 0; l < logs; ++l)
    for (int e = r.low_; e < r.order_; ++e)
      r.c_[l][static_cast<size_t>(e - r.low_)] = coeff(static_cast<int>(l), e) + o.coeff(static_cast<int>(l), e);
  r.trim_logs();
  return *this = std::move(r);
}

LogSeries& LogSeries::operator-=(const LogSeries& o) {
  LogSeries neg = o;
  neg *= -1;
  return *this += neg;
}

LogSeries& LogSeries::operator*=(const BigRational& s) {
  for (auto& row : c_)
    for (auto& c : row) c *= s;
  trim_logs();
  return *this;
}

LogSeries operator*(const LogSeries& a, const LogSeries& b) {
  if (a.var_ != b.var_) throw std::invalid_argument("LogSeries: variable mismatch");
  LogSeries r(a.var_, a.low_ + b.low_, std::min(a.order_ + b.low_, b.order_ + a.low_));
  if (a.c_.empty() || b.c_.empty()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, std::vector<BigRational>(r.width()));
  for (size_t la = 0; la < a.c_.size(); ++la)
    for (size_t lb = 0; lb < b.c_.size(); ++lb)
      for (int ea = a.low_; ea < a.order_; ++ea) {
        const BigRational& ca = a.c_[la][static_cast<size_t>(ea - a.low_)];
        if (sgn(ca) == 0) continue;
        for (int eb = b.low_; eb < b.order_ && ea + eb < r.order_; ++eb) {
          const BigRational& cb = b.c_[lb][static_cast<size_t>(eb - b.low_)];
          if (sgn(cb) != 0) r.c_[la + lb][static_cast<size_t>(ea + eb - r.low_)] += ca * cb;
        }
      }
  r.trim_logs();
  return r;
}

bool operator==(const LogSeries& a, const LogSeries& b) {
  if (a.var_ != b.var_) return false;
  const int lo = std::min(a.low_, b.low_);
  const int hi = std::min(a.order_, b.order_);
  const int logs = std::max(a.log_degree(), b.log_degree());
  for (int l = 0; l <= logs; ++l)
    for (int e = lo; e < hi; ++e)
      if (a.coeff(l, e) != b.coeff(l, e)) return false;
  return true;
}

std::pair<LogSeries, LogSeries> frobenius_solutions(int trunc) {
  if (trunc < 4) throw std::domain_error("frobenius_solutions: truncation order must be >= 4");
  LogSeries y1("t", 0, trunc);
  LogSeries s("t", 0, trunc);
  BigRational term = 1;  // (1/4)^k / (k!)^2
  BigRational harmonic = 0;
  for (int k = 0; 2 * k < trunc; ++k) {
    if (k > 0) {
      term /= BigRational(4L * k * k);
      harmonic += BigRational(1, k);
    }
    y1.set_coeff(0, 2 * k, term);
    if (k > 0) s.set_coeff(0, 2 * k, -harmonic * term);
  }
  LogSeries y2 = y1.times_log(1) + s;
  return {y1, y2};
}

LogSeries apply_to_log_series(const DiffOp& op, const LogSeries& s) {
  if (op.variable() != s.variable()) throw std::invalid_argument("apply_to_log_series: variable mismatch");
  if (op.is_zero()) return LogSeries(s.variable(), s.low(), s.order());
  LogSeries result(s.variable(), s.low(), s.order());
  bool first = true;
  LogSeries dk = s;
  for (int k = 0; k <= op.order(); ++k) {
    if (k > 0) dk = dk.derivative();
    if (op.coeff(k).is_zero()) continue;
    LogSeries term = dk.times(op.coeff(k));
    if (first) {
      result = std::move(term);
      first = false;
    } else {
      result += term;
    }
  }
  if (result.order() < 1) throw std::domain_error("apply_to_log_series: truncation order fell below 1");
  return result;
}

}  // namespace bmlab::exact
