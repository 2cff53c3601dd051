#pragma once

#include <string>
#include <vector>

#include "bmlab/exact/poly.hpp"

namespace bmlab::vanhove {

using exact::BigRational;
using exact::Poly;

/// Reduced quotient num/den of polynomials in one variable; den monic.
class RatFunc {
 public:
  RatFunc() : num_("u"), den_(Poly::constant("u", 1)) {}
  RatFunc(Poly num);  // NOLINT(google-explicit-constructor)
  RatFunc(Poly num, Poly den);
  static RatFunc constant(const std::string& var, const BigRational& c);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc derivative() const;
  BigRational eval(const BigRational& x) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc& operator*=(const BigRational& s);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator*(RatFunc a, const BigRational& s) { return a *= s; }
  friend RatFunc operator*(const BigRational& s, RatFunc a) { return a *= s; }
  RatFunc operator-() const { return *this * BigRational(-1); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

/// Element sum_k f_k * ell^k of the field of rational functions with a transcendental ell adjoined,
/// d ell/du = dlog (shared by all elements that are combined).
class LogElem {
 public:
  LogElem() = default;
  LogElem(RatFunc f0, RatFunc dlog) : dlog_(std::move(dlog)) { c_.push_back(std::move(f0)); trim(); }
  static LogElem ell(const RatFunc& dlog);

  /// Degree in ell; -1 for zero.
  int log_degree() const { return static_cast<int>(c_.size()) - 1; }
  RatFunc coeff(int k) const;
  const RatFunc& dlog() const { return dlog_; }
  bool is_zero() const { return c_.empty(); }

  LogElem derivative() const;

  LogElem& operator+=(const LogElem& o);
  LogElem& operator-=(const LogElem& o);
  LogElem& operator*=(const BigRational& s);
  friend LogElem operator+(LogElem a, const LogElem& b) { return a += b; }
  friend LogElem operator-(LogElem a, const LogElem& b) { return a -= b; }
  friend LogElem operator*(const LogElem& a, const LogElem& b);
  friend LogElem operator*(LogElem a, const BigRational& s) { return a *= s; }
  friend LogElem operator*(const BigRational& s, LogElem a) { return a *= s; }
  friend bool operator==(const LogElem& a, const LogElem& b) { return a.c_ == b.c_; }

 private:
  void trim();
  const RatFunc& shared_dlog(const LogElem& o) const;
  std::vector<RatFunc> c_;
  RatFunc dlog_;
};

}  // namespace bmlab::vanhove
