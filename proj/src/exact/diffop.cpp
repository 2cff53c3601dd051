#include "bmlab/exact/diffop.hpp"

#include <sstream>
#include <stdexcept>

namespace bmlab::exact {

namespace {
LaurentPoly deriv(const LaurentPoly& p) { return p.derivative(); }
}  // namespace

DiffOp::DiffOp(std::string var, std::vector<LaurentPoly> coeffs) : var_(std::move(var)), c_(std::move(coeffs)) {
  for (auto& c : c_) c = c.with_variable(var_);
  trim();
}

void DiffOp::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

DiffOp DiffOp::identity(const std::string& var) { return DiffOp(var, {LaurentPoly::constant(var, 1)}); }

DiffOp DiffOp::derivation(const std::string& var) {
  return DiffOp(var, {LaurentPoly(var), LaurentPoly::constant(var, 1)});
}

DiffOp DiffOp::multiplication(const LaurentPoly& f) { return DiffOp(f.variable(), {f}); }

DiffOp DiffOp::theta(const std::string& var) { return DiffOp(var, {LaurentPoly(var), LaurentPoly::monomial(var, 1)}); }

const LaurentPoly& DiffOp::coeff(int k) const {
  static const LaurentPoly zero;
  if (k < 0 || k > order()) return zero;
  return c_[static_cast<size_t>(k)];
}

bool DiffOp::has_polynomial_coefficients() const {
  for (const auto& c : c_)
    if (!c.is_polynomial()) return false;
  return true;
}

int DiffOp::max_coeff_degree() const {
  int d = 0;
  for (const auto& c : c_)
    if (!c.is_zero()) d = std::max(d, c.max_exponent());
  return d;
}

DiffOp DiffOp::compose(const DiffOp& right) const {
  if (var_ != right.var_) throw std::invalid_argument("DiffOp::compose: variable mismatch");
  return DiffOp(var_, compose_coeffs(c_, right.c_, LaurentPoly(var_), deriv));
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  if (var_ != o.var_) throw std::invalid_argument("DiffOp: variable mismatch");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), LaurentPoly(var_));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  if (var_ != o.var_) throw std::invalid_argument("DiffOp: variable mismatch");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), LaurentPoly(var_));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

DiffOp& DiffOp::operator*=(const BigRational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

bool operator==(const DiffOp& a, const DiffOp& b) { return a.var_ == b.var_ && a.c_ == b.c_; }

std::string DiffOp::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = order(); k >= 0; --k) {
    const auto& c = coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (k > 0) os << "*D^" << k;
  }
  return os.str();
}

DiffOp bmw_operator(int m) {
  if (m < 1) throw std::domain_error("bmw_operator: factor count must be >= 1");
  const std::string t = "t";
  const DiffOp theta = DiffOp::theta(t);
  DiffOp prev = DiffOp::identity(t);
  DiffOp cur = theta;
  for (int k = 1; k <= m; ++k) {
    const BigRational w = -BigRational(k) * (m + 1 - k);
    DiffOp next = theta.compose(cur) + DiffOp::multiplication(LaurentPoly::monomial(t, 2, w)).compose(prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

DiffOp formal_adjoint(const DiffOp& op) {
  return DiffOp(op.variable(), adjoint_coeffs(op.coefficients(), LaurentPoly(op.variable()), deriv));
}

}  // namespace bmlab::exact
