#include "bmlab/mpnum/constants.hpp"

#include <stdexcept>
#include <string>

namespace bmlab::mpnum {

BigFloat constant(Constant c, Precision p) {
  BigFloat r(p);
  switch (c) {
    case Constant::Pi:
      mpfr_const_pi(r.raw(), MPFR_RNDN);
      return r;
    case Constant::EulerGamma:
      mpfr_const_euler(r.raw(), MPFR_RNDN);
      return r;
    case Constant::Log2:
      mpfr_const_log2(r.raw(), MPFR_RNDN);
      return r;
    case Constant::Bologna: {
      const Precision w = p + 32;
      BigFloat prod(1L, w);
      for (long k : {1L, 2L, 4L, 8L}) prod *= gamma(BigFloat(exact::BigRational(k, 15), w));
      const BigFloat pw = constant(Constant::Pi, w);
      return (prod / (sqrt(BigFloat(5L, w)) * 240 * pw * pw)).at(p);
    }
  }
  throw std::invalid_argument("constant: unknown constant");
}

BigFloat constant(std::string_view name, Precision p) {
  if (name == "pi") return constant(Constant::Pi, p);
  if (name == "euler_gamma") return constant(Constant::EulerGamma, p);
  if (name == "log2") return constant(Constant::Log2, p);
  if (name == "bologna") return constant(Constant::Bologna, p);
  throw std::invalid_argument("constant: unknown name '" + std::string(name) + "'");
}

}  // namespace bmlab::mpnum
