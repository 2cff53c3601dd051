#pragma once

#include "bmlab/exact/diffop.hpp"
#include "bmlab/exact/poly.hpp"

namespace bmlab::exact {

enum class PairFlavor { I, K };

/// c0(t) B0(t) + c1(t) B1(t) with {B0,B1} = {I0,I1} or {K0,K1}.
struct BesselPairExpr {
  PairFlavor flavor = PairFlavor::I;
  LaurentPoly c0{"t"};
  LaurentPoly c1{"t"};

  /// +1 for the I pair, -1 for the K pair.
  int sigma() const { return flavor == PairFlavor::I ? 1 : -1; }
  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }

  /// I: I0' = I1, I1' = I0 - I1/t.  K: K0' = -K1, K1' = -K0 - K1/t.
  BesselPairExpr derivative() const;

  BesselPairExpr& operator+=(const BesselPairExpr& o);
  BesselPairExpr& operator*=(const LaurentPoly& f);
  friend BesselPairExpr operator+(BesselPairExpr a, const BesselPairExpr& b) { return a += b; }
  friend BesselPairExpr operator*(const LaurentPoly& f, BesselPairExpr e) { return e *= f; }
  friend bool operator==(const BesselPairExpr& a, const BesselPairExpr& b) {
    return a.flavor == b.flavor && a.c0 == b.c0 && a.c1 == b.c1;
  }
};

BesselPairExpr apply_to_bessel_pair(const DiffOp& op, const BesselPairExpr& e);

}  // namespace bmlab::exact
