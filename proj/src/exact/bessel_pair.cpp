#include "bmlab/exact/bessel_pair.hpp"

#include <stdexcept>

namespace bmlab::exact {

BesselPairExpr BesselPairExpr::derivative() const {
  const BigRational s = sigma();
  BesselPairExpr d{flavor, c0.derivative() + c1 * s, c1.derivative() + c0 * s - c1.shifted(-1)};
  return d;
}

BesselPairExpr& BesselPairExpr::operator+=(const BesselPairExpr& o) {
  if (flavor != o.flavor) throw std::invalid_argument("BesselPairExpr: flavor mismatch");
  c0 += o.c0;
  c1 += o.c1;
  return *this;
}

BesselPairExpr& BesselPairExpr::operator*=(const LaurentPoly& f) {
  c0 *= f;
  c1 *= f;
  return *this;
}

BesselPairExpr apply_to_bessel_pair(const DiffOp& op, const BesselPairExpr& e) {
  if (op.variable() != e.c0.variable() || op.variable() != e.c1.variable())
    throw std::invalid_argument("apply_to_bessel_pair: variable mismatch");
  BesselPairExpr out{e.flavor, LaurentPoly(op.variable()), LaurentPoly(op.variable())};
  BesselPairExpr dk = e;
  for (int k = 0; k <= op.order(); ++k) {
    if (k > 0) dk = dk.derivative();
    out += op.coeff(k) * dk;
  }
  return out;
}

}  // namespace bmlab::exact
