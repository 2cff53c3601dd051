#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bmlab/exact/diffop.hpp"
#include "bmlab/exact/poly.hpp"

namespace bmlab::sumrule {

using exact::BigInt;
using exact::BigRational;
using exact::DiffOp;
using exact::Poly;

struct ABPair {
  int n = 0;
  Poly A{"xi"};
  Poly B{"xi"};
};

/// Weight polynomial f_n with int [K0]^{n+2} t f_n(t^2) dt = (n+1)! and
/// int [I0]^a [K0]^{n+2-a} t f_n(t^2) dt = 0 for 1 <= a < (n+2)/2.
struct SumRulePoly {
  int n = 0;
  Poly f{"xi"};
  int scale_denominator = 0;  // n + 4
};

struct RecurrenceTerm {
  int shift = 0;
  Poly coeff{"s"};
};

/// sum_j coeff_j(s) M(s + shift_j) = 0 for M(s) = int t^s F(t) dt.
struct MomentRecurrence {
  int factor_count = 0;
  std::vector<RecurrenceTerm> terms;  // ascending shifts, lowest shift 0

  const Poly* at_shift(int shift) const;
  int max_shift() const { return terms.empty() ? 0 : terms.back().shift; }
};

/// Applies the adjoint of the order-(n+1) annihilator to I0/t and K0/t and reads off
/// (A, B) from (n-1)[t A(t^2) I0 + t^2 B(t^2) I1] and (n-1)[t A(t^2) K0 - t^2 B(t^2) K1].
/// Throws InternalConsistencyError if either reduction has another shape or they disagree.
ABPair derive_AB(int n);

SumRulePoly sumrule_poly(int n);

/// Mellin transform of the annihilator of m-fold products, normalized: integer
/// coefficients with unit content, highest-shift coefficient with positive lead.
MomentRecurrence moment_recurrence(int m);

/// Coefficient polynomials c_{2j}(s) written as lambda * (-1)^j * p_j(x) with x = alpha*s + beta_j.
struct RecurrenceMatch {
  bool matched = false;
  BigRational lambda = 0;
  BigRational alpha = 0;
  std::vector<BigRational> beta;  // one per j
  std::string substitution;      // human-readable, e.g. "x = s + j + 1"
};

/// Tabulated p_{m,j}(x), j = 0..3, for m in {5, 6}.
std::vector<Poly> tabulated_recurrence_family(int m);

/// Searches alpha in {1, 2, 1/2} and beta_j = b0 + b1*j with small integers for a
/// common rational lambda relating the recurrence to the tabulated family.
RecurrenceMatch match_tabulated_family(const MomentRecurrence& rec, const std::vector<Poly>& family);

}  // namespace bmlab::sumrule
