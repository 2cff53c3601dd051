#pragma once

#include <gmpxx.h>

#include <map>
#include <span>
#include <string>
#include <vector>

namespace bmlab::exact {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Renders a rational as "p" or "p/q".
std::string to_string(const BigRational& q);
BigRational parse_rational(const std::string& text);

/// Dense univariate polynomial with exact rational coefficients.
///
/// The variable name is runtime data so the same machinery serves t-, u- and
/// xi-polynomials. Trailing zeros are always trimmed; the zero polynomial has
/// degree kZeroDegree. Constants are compatible with every variable name.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() : var_("t") {}
  explicit Poly(std::string var) : var_(std::move(var)) {}
  Poly(std::string var, std::vector<BigRational> coeffs);
  Poly(std::string var, std::initializer_list<long> coeffs);

  static Poly constant(std::string var, const BigRational& c);
  static Poly monomial(std::string var, int degree, const BigRational& c = 1);

  const std::string& variable() const { return var_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const BigRational& coeff(int k) const;
  const BigRational& leading() const { return coeff(degree()); }
  std::span<const BigRational> coefficients() const { return c_; }

  Poly derivative() const;
  BigRational eval(const BigRational& x) const;
  /// Substitutes var -> var^k.
  Poly substitute_power(int k) const;
  /// Substitutes var -> alpha*var + beta.
  Poly substitute_affine(const BigRational& alpha, const BigRational& beta) const;
  Poly with_variable(std::string var) const;

  /// True iff every coefficient is an integer.
  bool is_integral() const;
  /// Positive gcd of the numerators after clearing denominators.
  BigInt integer_content() const;
  BigInt denominator_lcm() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const BigRational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const BigRational& s) { return a *= s; }
  friend Poly operator*(const BigRational& s, Poly a) { return a *= s; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b);

  /// Euclidean division; throws std::domain_error on a zero divisor.
  static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
  /// Monic gcd (zero if both inputs are zero).
  static Poly gcd(Poly a, Poly b);

  std::string to_string() const;

 private:
  void trim();
  const std::string& merged_var(const Poly& o) const;

  std::string var_;
  std::vector<BigRational> c_;
};

/// Sparse Laurent polynomial: exponent -> nonzero coefficient.
class LaurentPoly {
 public:
  LaurentPoly() : var_("t") {}
  explicit LaurentPoly(std::string var) : var_(std::move(var)) {}
  LaurentPoly(const Poly& p);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(std::string var, int exponent, const BigRational& c = 1);
  static LaurentPoly constant(std::string var, const BigRational& c) { return monomial(std::move(var), 0, c); }

  const std::string& variable() const { return var_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  /// Lowest/highest exponent present; undefined for the zero polynomial.
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }
  BigRational coeff(int e) const;
  const std::map<int, BigRational>& terms() const { return terms_; }

  void add_term(int e, const BigRational& c);
  LaurentPoly derivative() const;
  LaurentPoly shifted(int k) const;  // multiply by var^k
  BigRational eval(const BigRational& x) const;
  bool is_polynomial() const { return terms_.empty() || min_exponent() >= 0; }
  /// Throws std::domain_error if negative exponents are present.
  Poly to_poly() const;
  LaurentPoly with_variable(std::string var) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const BigRational& s);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const BigRational& s) { return a *= s; }
  friend LaurentPoly operator*(const BigRational& s, LaurentPoly a) { return a *= s; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  std::string to_string() const;

 private:
  const std::string& merged_var(const LaurentPoly& o) const;

  std::string var_;
  std::map<int, BigRational> terms_;
};

inline LaurentPoly derivative(const LaurentPoly& p) { return p.derivative(); }

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

}  // namespace bmlab::exact
