#pragma once

#include <vector>

#include "bmlab/cli/certificate.hpp"
#include "bmlab/mpnum/bigfloat.hpp"
#include "bmlab/sumrule/sumrule.hpp"

namespace bmlab::sumrule {

/// int [I0]^a [K0]^{n+2-a} t f_n(t^2) dt against (n+1)! (a = 0) or 0 (1 <= a < (n+2)/2).
/// Zero targets are judged relative to sum_k |f_k| IKM(a, n+2-a; 2k+1).
cli::Certificate verify_sumrule(int n, int a, mpnum::Precision p, cli::Tolerance tol = {1e-20, true});

/// max over starts s of |sum_j c_j(s) M(s+j)| / sum_j |c_j(s) M(s+j)| with M(s) = IKM(a, b; s).
/// Needs b > a and a + b = rec.factor_count.
mpnum::BigFloat recurrence_residual(const MomentRecurrence& rec, int a, int b, const std::vector<int>& starts,
                                    mpnum::Precision p);

}  // namespace bmlab::sumrule
