#include "bmlab/exact/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace bmlab::exact {

namespace {
const BigRational kZero = 0;

void append_term(std::ostringstream& os, bool& first, const BigRational& c, const std::string& var, int e) {
  if (sgn(c) == 0) return;
  BigRational mag = abs(c);
  if (first) {
    if (sgn(c) < 0) os << "-";
  } else {
    os << (sgn(c) < 0 ? " - " : " + ");
  }
  first = false;
  const bool unit = mag == 1;
  if (e == 0) {
    os << to_string(mag);
    return;
  }
  if (!unit) os << to_string(mag) << "*";
  os << var;
  if (e != 1) os << "^" << e;
}
}  // namespace

std::string to_string(const BigRational& q) {
  return q.get_str();
}

BigRational parse_rational(const std::string& text) {
  BigRational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(std::string var, std::vector<BigRational> coeffs) : var_(std::move(var)), c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Poly::Poly(std::string var, std::initializer_list<long> coeffs) : var_(std::move(var)) {
  c_.reserve(coeffs.size());
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

Poly Poly::constant(std::string var, const BigRational& c) { return Poly(std::move(var), std::vector<BigRational>{c}); }

Poly Poly::monomial(std::string var, int degree, const BigRational& c) {
  if (degree < 0) throw std::invalid_argument("Poly::monomial: negative degree");
  std::vector<BigRational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(var), std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const BigRational& Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(k)];
}

const std::string& Poly::merged_var(const Poly& o) const {
  if (var_ == o.var_ || o.is_constant()) return var_;
  if (is_constant()) return o.var_;
  throw std::invalid_argument("Poly: variable mismatch '" + var_ + "' vs '" + o.var_ + "'");
}

Poly Poly::derivative() const {
  std::vector<BigRational> d;
  for (size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
  return Poly(var_, std::move(d));
}

BigRational Poly::eval(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::substitute_power(int k) const {
  if (k < 1) throw std::invalid_argument("Poly::substitute_power: k must be >= 1");
  if (is_zero()) return *this;
  std::vector<BigRational> v(static_cast<size_t>(degree() * k) + 1);
  for (size_t j = 0; j < c_.size(); ++j) v[j * static_cast<size_t>(k)] = c_[j];
  return Poly(var_, std::move(v));
}

Poly Poly::substitute_affine(const BigRational& alpha, const BigRational& beta) const {
  Poly lin(var_, std::vector<BigRational>{beta, alpha});
  Poly acc(var_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= lin;
    acc += constant(var_, *it);
  }
  return acc;
}

Poly Poly::with_variable(std::string var) const {
  Poly p = *this;
  p.var_ = std::move(var);
  return p;
}

bool Poly::is_integral() const {
  for (const auto& c : c_)
    if (c.get_den() != 1) return false;
  return true;
}

BigInt Poly::denominator_lcm() const {
  BigInt l = 1;
  for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

BigInt Poly::integer_content() const {
  const BigInt l = denominator_lcm();
  BigInt g = 0;
  for (const auto& c : c_) {
    BigRational scaled = c * l;
    BigInt num = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  return g;
}

Poly& Poly::operator+=(const Poly& o) {
  var_ = merged_var(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  var_ = merged_var(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  var_ = merged_var(o);
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<BigRational> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const BigRational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.c_ != b.c_) return false;
  return a.var_ == b.var_ || a.is_constant();
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
  const std::string& var = num.merged_var(den);
  Poly q(var), r = num;
  r.var_ = var;
  const BigRational lead = den.leading();
  while (!r.is_zero() && r.degree() >= den.degree()) {
    const int shift = r.degree() - den.degree();
    Poly t = monomial(var, shift, r.leading() / lead);
    q += t;
    r -= t * den;
  }
  return {q, r};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a *= BigRational(1) / a.leading();
  return a;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = degree(); e >= 0; --e) append_term(os, first, coeff(e), var_, e);
  return os.str();
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const Poly& p) : var_(p.variable()) {
  for (int k = 0; k <= p.degree(); ++k)
    if (sgn(p.coeff(k)) != 0) terms_.emplace(k, p.coeff(k));
}

LaurentPoly LaurentPoly::monomial(std::string var, int exponent, const BigRational& c) {
  LaurentPoly p(std::move(var));
  p.add_term(exponent, c);
  return p;
}

const std::string& LaurentPoly::merged_var(const LaurentPoly& o) const {
  if (var_ == o.var_ || o.is_constant()) return var_;
  if (is_constant()) return o.var_;
  throw std::invalid_argument("LaurentPoly: variable mismatch '" + var_ + "' vs '" + o.var_ + "'");
}

BigRational LaurentPoly::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigRational(0) : it->second;
}

void LaurentPoly::add_term(int e, const BigRational& value) {
  if (sgn(value) == 0) return;
  BigRational c = value;
  c.canonicalize();
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly d(var_);
  for (const auto& [e, c] : terms_)
    if (e != 0) d.terms_.emplace(e - 1, c * e);
  return d;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly d(var_);
  for (const auto& [e, c] : terms_) d.terms_.emplace(e + k, c);
  return d;
}

BigRational LaurentPoly::eval(const BigRational& x) const {
  if (sgn(x) == 0 && !is_polynomial()) throw std::domain_error("LaurentPoly::eval: pole at zero");
  BigRational acc = 0;
  for (const auto& [e, c] : terms_) {
    BigRational p = 1;
    mpz_pow_ui(p.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(std::abs(e)));
    mpz_pow_ui(p.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(std::abs(e)));
    p.canonicalize();
    if (e < 0) p = 1 / p;
    acc += c * p;
  }
  return acc;
}

Poly LaurentPoly::to_poly() const {
  if (!is_polynomial()) throw std::domain_error("LaurentPoly::to_poly: negative exponent present");
  if (terms_.empty()) return Poly(var_);
  std::vector<BigRational> v(static_cast<size_t>(max_exponent()) + 1);
  for (const auto& [e, c] : terms_) v[static_cast<size_t>(e)] = c;
  return Poly(var_, std::move(v));
}

LaurentPoly LaurentPoly::with_variable(std::string var) const {
  LaurentPoly p = *this;
  p.var_ = std::move(var);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  var_ = merged_var(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  var_ = merged_var(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r(a.merged_var(b));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const BigRational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_ != b.terms_) return false;
  return a.var_ == b.var_ || a.is_constant();
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) append_term(os, first, it->second, var_, it->first);
  return os.str();
}

BigInt factorial(unsigned n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace bmlab::exact
