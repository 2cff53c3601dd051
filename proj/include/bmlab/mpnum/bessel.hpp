#pragma once

#include <string_view>

#include "bmlab/mpnum/bigfloat.hpp"

namespace bmlab::mpnum {

enum class BesselKind { I0, I1, K0, K1, J0, Y0, J1 };

std::string_view to_string(BesselKind k);

/// Relative error below 2^-(p-8). Throws std::domain_error for t < 0, and for
/// t = 0 with K0, K1, Y0.
BigFloat bessel_eval(BesselKind kind, const BigFloat& t, Precision p);

struct ModifiedBesselSet {
  BigFloat i0, i1, k0, k1;
};

/// I0, I1, K0, K1 at one point, sharing the series work. t > 0.
ModifiedBesselSet modified_bessel_all(const BigFloat& t, Precision p);

/// Arguments at or above this use the asymptotic expansions for I and K.
double bessel_asymptotic_threshold(Precision p);

namespace detail {
// Regime-forced evaluators, exposed so tests can compare them on an overlap window.
ModifiedBesselSet modified_bessel_series(const BigFloat& t, Precision p);
ModifiedBesselSet modified_bessel_asymptotic(const BigFloat& t, Precision p);
}  // namespace detail

}  // namespace bmlab::mpnum
