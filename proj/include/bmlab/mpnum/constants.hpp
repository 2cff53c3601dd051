#pragma once

#include <string_view>

#include "bmlab/mpnum/bigfloat.hpp"

namespace bmlab::mpnum {

enum class Constant { Pi, EulerGamma, Log2, Bologna };

/// Correctly rounded for pi, gamma and log 2; Bologna constant
/// C = Gamma(1/15) Gamma(2/15) Gamma(4/15) Gamma(8/15) / (240 sqrt(5) pi^2)
/// from the Gamma product, evaluated with guard bits.
BigFloat constant(Constant c, Precision p);
/// Accepts "pi", "euler_gamma", "log2", "bologna". Throws std::invalid_argument otherwise.
BigFloat constant(std::string_view name, Precision p);

inline BigFloat pi(Precision p) { return constant(Constant::Pi, p); }
inline BigFloat euler_gamma(Precision p) { return constant(Constant::EulerGamma, p); }
inline BigFloat log2_const(Precision p) { return constant(Constant::Log2, p); }

}  // namespace bmlab::mpnum
