#pragma once

#include <json.hpp>

#include <vector>

#include "bmlab/exact/poly.hpp"
#include "bmlab/mpnum/bigcomplex.hpp"

namespace bmlab::modular {

using exact::BigRational;

/// q^lead * sum_{k < order} c_k q^k + O(q^{lead + order}), exact coefficients.
class QSeries {
 public:
  QSeries() = default;
  QSeries(BigRational lead, std::vector<BigRational> coeffs);
  /// The constant c with `order` known coefficients.
  static QSeries constant(const BigRational& c, int order);

  const BigRational& lead() const { return lead_; }
  int order() const { return static_cast<int>(c_.size()); }
  const std::vector<BigRational>& coeffs() const { return c_; }
  /// Coefficient of q^{lead + k}; zero past the end is an error.
  const BigRational& coeff(int k) const;

  QSeries truncated(int order) const;
  QSeries inverse() const;
  QSeries pow(long n) const;
  /// q d/dq, term by term.
  QSeries q_derivative() const;
  /// q -> q^k.
  QSeries substitute(int k) const;

  /// Drops leading zero coefficients, raising `lead` accordingly.
  QSeries normalized() const;

  /// sum_k c_k q^k (the q^lead prefactor is the caller's).
  mpnum::BigComplex eval_body(const mpnum::BigComplex& q, mpnum::Precision p) const;

  QSeries& operator*=(const QSeries& o);
  QSeries& operator+=(const QSeries& o);
  QSeries& operator*=(const BigRational& s);
  friend QSeries operator*(QSeries a, const QSeries& b) { return a *= b; }
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator*(QSeries a, const BigRational& s) { return a *= s; }
  /// Equal leading exponent and coefficients up to the shorter order.
  friend bool agree(const QSeries& a, const QSeries& b);

 private:
  BigRational lead_{0};
  std::vector<BigRational> c_;
};

/// eta(scale*z) as a q-series: leading exponent scale/24, coefficients from the
/// pentagonal-number expansion of prod (1 - q^{scale n}).
QSeries eta_qseries(int scale, int order);

/// prod_{n>=1} (1 - q^{scale n}) multiplied out directly (test oracle).
QSeries eta_product_direct(int scale, int order);

struct ModularObjects {
  int order = 0;
  QSeries X63;     // [eta(2z)eta(6z)/(eta(z)eta(3z))]^6
  QSeries Z63;     // [eta(z)eta(3z)]^4/[eta(2z)eta(6z)]^2
  QSeries f66;     // weight-6 cusp form, sum of two eta quotients
  QSeries alpha3;  // 1/(1 + eta(z)^12/(27 eta(3z)^12))
};

/// Builds all four to `order` coefficients (order >= 20) and checks f66 = Z63^2 q dX63/dq
/// coefficientwise; throws std::logic_error on mismatch. Cached per order.
const ModularObjects& modular_objects(int order);

/// First `count` coefficients of each object, as rational strings.
nlohmann::ordered_json coefficients_json(int count);

}  // namespace bmlab::modular
