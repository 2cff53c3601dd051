#pragma once

#include <functional>
#include <vector>

#include "bmlab/mpnum/bessel.hpp"
#include "bmlab/mpnum/bigfloat.hpp"
#include "bmlab/mpnum/quadrature.hpp"

namespace bmlab::mpnum {

/// k-th positive zero (k >= 1) of J0, J1 or Y0: McMahon start, Newton polish.
BigFloat bessel_zero(BesselKind kind, long k, Precision p);

/// Levin u-transform of partial sums s[0..n], using the last k+1 entries.
/// Terms are recovered as s[j] - s[j-1]; needs n >= k + 1.
BigFloat levin_u(const std::vector<BigFloat>& partial_sums, int k);

struct OscillatoryOptions {
  /// Zero-partition panels beyond which the integrator gives up.
  long max_panels = 4000;
  int levin_terms = 24;
  /// Target: |error| <= 2^-tol_bits * |value|.
  long tol_bits = 80;
  /// Plain summation may stop only past this abscissa (integrand tail negligible beyond it).
  double negligible_after = 0.0;
  QuadOptions panel{};
};

struct OscillatoryResult {
  BigFloat value;
  BigFloat error;
  long panels = 0;
  long evaluations = 0;
  bool accelerated = false;
  bool converged = false;
};

using ScalarFunction = std::function<BigFloat(const BigFloat& t)>;

/// int_0^inf f(t) dt for f oscillating with the kernel kind(x t): the range is cut at 1, 2, 4, ...
/// below the first kernel zero, then at every kernel zero; the panel sequence is summed
/// directly while it decays and otherwise extrapolated with Levin-u.
OscillatoryResult integrate_oscillatory(const ScalarFunction& f, BesselKind kernel, const BigFloat& x, Precision p,
                                        const OscillatoryOptions& opt = {});

/// int_a^b f(t) dt on a rescaled [0,1] tanh-sinh rule; f sees the exact distance to a when a = 0.
QuadResult integrate_panel(const ScalarFunction& f, const BigFloat& a, const BigFloat& b, Precision p,
                           const QuadOptions& opt = {});

}  // namespace bmlab::mpnum
