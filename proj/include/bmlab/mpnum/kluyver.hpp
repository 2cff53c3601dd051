#pragma once

#include <vector>

#include "bmlab/mpnum/moments.hpp"

namespace bmlab::mpnum {

/// Planar random-walk densities p_n(x) = int J0(xt) J0(t)^n x t dt.

/// p3 through (6/pi^2) x int I0(xt) I0 K0^2 t dt; 0 <= x < 1, domain error otherwise.
Estimate kluyver_p3(const BigFloat& x, Precision p);

/// p7 through the I/K representation
/// 35 x [ (4/pi^6) int I0(xt) I0 K0^6 t dt - (2/pi^4) int I0(xt) I0^3 K0^4 t dt ]; 0 <= x <= 1.
Estimate kluyver_p7(const BigFloat& x, Precision p);

/// The defining oscillatory integral, any x >= 0 and n >= 3.
Estimate kluyver_direct(int n, const BigFloat& x, Precision p, const OscillatoryOptions& osc = {});

/// Dispatch: n = 3 or 7 use the I/K representations, anything else the direct integral.
BigFloat kluyver_p(int n, const BigFloat& x, Precision p);

/// -int J1(t) J0(t)^7 t^2 dt, the slope of p7(x)/x at x = 1 from the oscillatory side.
Estimate p7_slope_direct(Precision p, const OscillatoryOptions& osc = {});

/// p3(x)/(12 pi^2 x) + d^2/dx^2 [p7(x)/(35x)] for 0 < x < 1, with the second derivative taken
/// under the integral sign (I0'' (y) = I0(y) - I1(y)/y).
Estimate p7_limit_function(const BigFloat& x, Precision p);

struct LimitFit {
  BigFloat value;
  /// |fit with all samples - fit with one sample and one basis function fewer|
  BigFloat spread;
  std::vector<BigFloat> eps;
  std::vector<BigFloat> samples;
};

/// Richardson-type extrapolation of F(1 - eps) to eps -> 0 on eps = 2^-k, k in [k_lo, k_hi],
/// with basis 1, eps log eps, eps, eps^2 log eps, eps^2, ...
LimitFit p7_limit(Precision p, int k_lo = 6, int k_hi = 10);

/// Least-squares-free extrapolation: solves the square system for the basis above and
/// returns the constant term. eps.size() == values.size() >= 1.
BigFloat extrapolate_log_basis(const std::vector<BigFloat>& eps, const std::vector<BigFloat>& values);

}  // namespace bmlab::mpnum
