#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bmlab/exact/diffop.hpp"
#include "bmlab/exact/poly.hpp"

namespace bmlab::exact {

/// Truncated expansion sum_{l,e} c[l][e] t^e log^l t, known for e < order().
///
/// All log-powers share one lowest exponent and one valid order; products and
/// operator applications propagate the order that is actually guaranteed.
class LogSeries {
 public:
  LogSeries(std::string var, int low, int order);

  /// Power series sum_k coeffs[k] t^(low+k), valid below `order`.
  static LogSeries from_power_series(std::string var, int low, int order, const std::vector<BigRational>& coeffs);

  const std::string& variable() const { return var_; }
  int low() const { return low_; }
  int order() const { return order_; }
  /// Highest log power present (0 for a plain series, -1 if zero).
  int log_degree() const { return static_cast<int>(c_.size()) - 1; }
  BigRational coeff(int log_power, int exponent) const;
  void set_coeff(int log_power, int exponent, const BigRational& c);
  bool is_zero() const;

  LogSeries derivative() const;
  LogSeries times(const LaurentPoly& f) const;
  LogSeries truncated(int order) const;
  LogSeries times_log(int power = 1) const;

  LogSeries& operator+=(const LogSeries& o);
  LogSeries& operator-=(const LogSeries& o);
  friend LogSeries operator+(LogSeries a, const LogSeries& b) { return a += b; }
  friend LogSeries operator-(LogSeries a, const LogSeries& b) { return a -= b; }
  friend LogSeries operator*(const LogSeries& a, const LogSeries& b);
  LogSeries& operator*=(const BigRational& s);

  /// Exact equality on the common valid range.
  friend bool operator==(const LogSeries& a, const LogSeries& b);

 private:
  void trim_logs();
  size_t width() const { return static_cast<size_t>(order_ - low_); }

  std::string var_;
  int low_;
  int order_;
  std::vector<std::vector<BigRational>> c_;  // c_[log power][exponent - low_]
};

/// Frobenius basis of the modified Bessel equation at t = 0, valid below t^trunc:
/// y1 = sum (t/2)^{2k}/(k!)^2 and y2 = y1 log t - sum_{k>=1} H_k (t/2)^{2k}/(k!)^2.
std::pair<LogSeries, LogSeries> frobenius_solutions(int trunc);

/// Applies op to s. Throws std::domain_error if the valid order would drop below 1.
LogSeries apply_to_log_series(const DiffOp& op, const LogSeries& s);

}  // namespace bmlab::exact
