#pragma once

#include <optional>
#include <vector>

#include "bmlab/exact/poly.hpp"
#include "bmlab/mpnum/bigfloat.hpp"

namespace bmlab::mpnum {

struct IntegerRelation {
  /// Coefficients with sum_i coeffs[i] * values[i] ~ 0; first nonzero entry positive.
  std::vector<exact::BigInt> coeffs;
  BigFloat residual;
  BigFloat threshold;
  long iterations = 0;
};

struct RelationSearch {
  std::optional<IntegerRelation> relation;
  /// Lower bound on the Euclidean norm of any relation, when the search ran out.
  BigFloat norm_bound;
  BigFloat threshold;
  double height_bound = 1e6;
};

/// PSLQ on the values at precision p. A relation is accepted when
/// |sum v_i x_i| < 10^-(D-20) (D = decimal digits of p) and max |v_i| < height_bound.
/// Requires at least two values and p >= 128 bits.
RelationSearch find_integer_relation(const std::vector<BigFloat>& values, Precision p, double height_bound = 1e6);

/// Convenience form returning the relation only.
std::optional<std::vector<exact::BigInt>> integer_relation(const std::vector<BigFloat>& values, Precision p);

}  // namespace bmlab::mpnum
