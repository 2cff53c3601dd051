#pragma once

#include <string>
#include <vector>

#include "bmlab/exact/poly.hpp"

namespace bmlab::exact {

/// Composition of operators given as coefficient lists c[k] of D^k, for any
/// coefficient ring with a derivation. D^i (b .) = sum_l C(i,l) b^(l) D^(i-l).
template <class C, class Deriv>
std::vector<C> compose_coeffs(const std::vector<C>& a, const std::vector<C>& b, const C& zero, Deriv deriv) {
  if (a.empty() || b.empty()) return {};
  std::vector<C> out(a.size() + b.size() - 1, zero);
  for (size_t j = 0; j < b.size(); ++j) {
    C bd = b[j];
    for (size_t l = 0; l < a.size(); ++l) {
      for (size_t i = l; i < a.size(); ++i) {
        const BigInt binom = binomial(static_cast<unsigned>(i), static_cast<unsigned>(l));
        out[i - l + j] += a[i] * (BigRational(binom) * bd);
      }
      bd = deriv(bd);
    }
  }
  return out;
}

/// sum_k (-1)^k D^k (c[k] .) rewritten as sum_j c*[j] D^j.
template <class C, class Deriv>
std::vector<C> adjoint_coeffs(const std::vector<C>& c, const C& zero, Deriv deriv) {
  std::vector<C> out(c.size(), zero);
  for (size_t k = 0; k < c.size(); ++k) {
    C cd = c[k];
    const BigRational sign = (k % 2 == 0) ? 1 : -1;
    for (size_t l = 0; l <= k; ++l) {
      const BigInt binom = binomial(static_cast<unsigned>(k), static_cast<unsigned>(l));
      out[k - l] += cd * (sign * BigRational(binom));
      if (l < k) cd = deriv(cd);
    }
  }
  return out;
}

/// Linear ODE operator sum_k coeff(k) * (d/dvar)^k with Laurent coefficients.
class DiffOp {
 public:
  DiffOp() : var_("t") {}
  explicit DiffOp(std::string var) : var_(std::move(var)) {}
  DiffOp(std::string var, std::vector<LaurentPoly> coeffs);

  static DiffOp identity(const std::string& var);
  static DiffOp derivation(const std::string& var);
  static DiffOp multiplication(const LaurentPoly& f);
  /// var * d/dvar
  static DiffOp theta(const std::string& var);

  const std::string& variable() const { return var_; }
  /// -1 for the zero operator.
  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const LaurentPoly& coeff(int k) const;
  const std::vector<LaurentPoly>& coefficients() const { return c_; }
  bool has_polynomial_coefficients() const;
  /// Highest t-degree over all coefficients.
  int max_coeff_degree() const;

  DiffOp compose(const DiffOp& right) const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp& operator*=(const BigRational& s);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(DiffOp a, const BigRational& s) { return a *= s; }
  friend DiffOp operator*(const BigRational& s, DiffOp a) { return a *= s; }
  DiffOp operator-() const { return *this * BigRational(-1); }
  friend bool operator==(const DiffOp& a, const DiffOp& b);

  std::string to_string() const;

 private:
  void trim();
  std::string var_;
  std::vector<LaurentPoly> c_;
};

/// Operator of order m+1 annihilating every product of m solutions of
/// t^2 y'' + t y' - t^2 y = 0. Throws std::domain_error for m < 1.
DiffOp bmw_operator(int m);

/// sum_k (-1)^k D^k o coeff(k), expanded.
DiffOp formal_adjoint(const DiffOp& op);

}  // namespace bmlab::exact
