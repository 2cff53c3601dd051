#pragma once

#include <array>
#include <string>
#include <vector>

#include "bmlab/cli/certificate.hpp"
#include "bmlab/modular/qseries.hpp"
#include "bmlab/mpnum/bigcomplex.hpp"

namespace bmlab::modular {

using mpnum::BigComplex;
using mpnum::BigFloat;
using mpnum::Precision;

enum class ModularObject { X63, Z63, F66, Alpha3 };

std::string object_name(ModularObject o);

/// Point of the upper half-plane; the constructor rejects Im z <= 0.
class HalfPlanePoint {
 public:
  explicit HalfPlanePoint(BigComplex z);
  static HalfPlanePoint imaginary(const BigFloat& y);
  const BigComplex& z() const { return z_; }
  /// q = exp(2 pi i z)
  BigComplex q(Precision p) const;

 private:
  BigComplex z_;
};

struct EtaValue {
  BigComplex value;     // eta(tau)
  BigComplex logderiv;  // d/dtau log eta(tau)
  int inversions = 0;   // tau -> -1/tau steps used
};

struct EvalOptions {
  /// Apply tau -> -1/tau once more than needed and sum the series at the image
  /// without further reduction (consistency probe).
  bool extra_inversion = false;
};

/// eta(tau) with period shifts and inversions until Im tau >= 1/4 (|q| <= e^{-pi/2}),
/// then the pentagonal series. Throws std::runtime_error if reduction does not terminate.
EtaValue eta_eval(const BigComplex& tau, Precision p, const EvalOptions& opt = {});

BigComplex eval_modular(ModularObject obj, const HalfPlanePoint& z, Precision p, const EvalOptions& opt = {});

/// d alpha3 / dz from the logarithmic derivatives of eta(z) and eta(3z).
BigComplex alpha3_derivative(const HalfPlanePoint& z, Precision p);

/// z -> -1/(6z) and z -> (3z - 2)/(6z - 3).
BigComplex apply_w6(const BigComplex& z);
BigComplex apply_w3(const BigComplex& z);

/// max relative deviation of f66(W6 z) = -216 z^6 f66(z) at y = 0.3, 0.5, 0.8 (z = iy), both
/// sides evaluated independently. lvalue_f66 throws if this exceeds 2^-(p-32).
BigFloat f66_fricke_selftest(Precision p);

/// (1/Gamma(s)) int_0^inf f66(iy) (2 pi y)^s dy/y for s in {1,2,3}: the [1/sqrt6, inf) half termwise
/// with incomplete-gamma closed forms, the rest mapped by W6.
BigFloat lvalue_f66(int s, Precision p);

/// Integrals along z = iy, y in (0, inf), split at 1/sqrt(6) with the lower part mapped by W6.
struct AxisIntegrals {
  /// int_0^{i inf} [phi66 + chi66](z) z^k dz, k = 0, 1, 2.
  std::array<BigComplex, 3> weight;
  /// int_0^inf f66(iy) y^k dy, k = 0, 1, 2.
  std::array<BigFloat, 3> f_moment;
  /// The same with |integrand|, as residual scales.
  std::array<BigFloat, 3> weight_scale;
  BigFloat error;
  bool converged = false;
};

/// Cached per precision.
const AxisIntegrals& axis_integrals(Precision p);
BigComplex modular_weight_integral(int k, Precision p);

/// phi66 + chi66 at z, with u = -64 X63(z).
BigComplex phi_plus_chi(const HalfPlanePoint& z, Precision p);
BigComplex phi66(const HalfPlanePoint& z, Precision p);
BigComplex chi66(const HalfPlanePoint& z, Precision p);

/// 2F1(1/3, 2/3; 1; zeta) for 0 <= zeta <= 1/2 by its power series.
BigFloat hyp_third_series(const BigFloat& zeta, Precision p);
/// 2F1(1/3, 2/3; 1; 1 - eta) for 0 < eta <= 1/2 by the logarithmic expansion around 1.
BigFloat hyp_third_near_one(const BigFloat& eta, Precision p);
/// P_{-1/3}(x) = 2F1(1/3, 2/3; 1; (1 - x)/2), -1 < x <= 1.
BigFloat legendre_Pm13(const BigFloat& x, Precision p);

/// int_{-1}^{1} x P(x)^3 P(-x) dx, folded onto [0,1] so both endpoint arguments are exact.
BigFloat legendre_moment(Precision p);

/// At z = iy: the z-alpha3 relation and both base-change identities for phi66 and chi66.
std::vector<cli::Certificate> cz_basechange_check(const BigFloat& y, Precision p, cli::Tolerance tol = {1e-20, true});

}  // namespace bmlab::modular
