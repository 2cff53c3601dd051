#include "bmlab/vanhove/log_field.hpp"

#include <stdexcept>

namespace bmlab::vanhove {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.variable(), 1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  normalize();
}

RatFunc RatFunc::constant(const std::string& var, const BigRational& c) { return RatFunc(Poly::constant(var, c)); }

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(den_.variable(), 1);
    return;
  }
  const Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::divmod(num_, g).first;
    den_ = Poly::divmod(den_, g).first;
  }
  const BigRational lead = den_.leading();
  if (lead != 1) {
    num_ *= BigRational(1) / lead;
    den_ *= BigRational(1) / lead;
  }
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

BigRational RatFunc::eval(const BigRational& x) const {
  const BigRational d = den_.eval(x);
  if (d == 0) throw std::domain_error("RatFunc::eval: pole");
  return num_.eval(x) / d;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator*=(const BigRational& s) {
  num_ *= s;
  normalize();
  return *this;
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

LogElem LogElem::ell(const RatFunc& dlog) {
  LogElem e;
  e.dlog_ = dlog;
  const std::string& v = dlog.num().variable();
  e.c_ = {RatFunc::constant(v, 0), RatFunc::constant(v, 1)};
  return e;
}

RatFunc LogElem::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return RatFunc::constant(dlog_.num().variable(), 0);
  return c_[static_cast<size_t>(k)];
}

void LogElem::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const RatFunc& LogElem::shared_dlog(const LogElem& o) const {
  if (c_.size() <= 1) return o.dlog_;
  if (o.c_.size() > 1 && !(dlog_ == o.dlog_)) throw std::invalid_argument("LogElem: different adjoined logarithms");
  return dlog_;
}

LogElem LogElem::derivative() const {
  LogElem out;
  out.dlog_ = dlog_;
  out.c_.assign(c_.size(), RatFunc::constant(dlog_.num().variable(), 0));
  for (size_t k = 0; k < c_.size(); ++k) {
    out.c_[k] += c_[k].derivative();
    if (k > 0) out.c_[k - 1] += c_[k] * dlog_ * BigRational(static_cast<long>(k));
  }
  out.trim();
  return out;
}

LogElem& LogElem::operator+=(const LogElem& o) {
  dlog_ = shared_dlog(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), RatFunc::constant(dlog_.num().variable(), 0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

LogElem& LogElem::operator-=(const LogElem& o) { return *this += o * BigRational(-1); }

LogElem& LogElem::operator*=(const BigRational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

LogElem operator*(const LogElem& a, const LogElem& b) {
  LogElem out;
  out.dlog_ = a.shared_dlog(b);
  if (a.c_.empty() || b.c_.empty()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, RatFunc::constant(out.dlog_.num().variable(), 0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  out.trim();
  return out;
}

}  // namespace bmlab::vanhove
