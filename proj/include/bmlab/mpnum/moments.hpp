#pragma once

#include <optional>
#include <vector>

#include "bmlab/mpnum/bigfloat.hpp"
#include "bmlab/mpnum/oscillatory.hpp"
#include "bmlab/mpnum/quadrature.hpp"

namespace bmlab::mpnum {

enum class KernelKind { None, I0, I1, K0, K1, J0, Y0, J1 };

/// int_0^inf kernel(arg) [I0]^a [K0]^b t^m dt with arg = sqrt(u) t for the
/// modified kernels and arg = x t for J0/Y0/J1. `param` holds u or x.
/// `honorary` selects [I0K0]^2 {[I0K0]^2 - 1/(4t^2)} t^3 (a = b = 4, m = 3).
struct MomentSpec {
  KernelKind kernel = KernelKind::None;
  int a = 0;
  int b = 0;
  int m = 1;
  std::optional<BigFloat> param;
  bool honorary = false;
};

struct Estimate {
  BigFloat value;
  BigFloat error;
};

/// Exponential decay rate of the integrand at infinity; 0 for power-law decay,
/// negative for growth.
double decay_rate(const MomentSpec& s);
/// True when the integral converges absolutely or via the subtraction model.
bool converges(const MomentSpec& s);

/// IKM(a,b;m) = int [I0]^a [K0]^b t^m dt. Throws std::domain_error if divergent.
Estimate ikm_estimate(int a, int b, int m, Precision p, const QuadOptions& opt = {});
BigFloat ikm(int a, int b, int m, Precision p);

/// Several t-powers of one (a,b) family with a single pass over the nodes.
std::vector<Estimate> ikm_batch(int a, int b, const std::vector<int>& powers, Precision p, const QuadOptions& opt = {});

/// Honorary moment int [I0K0]^2 {[I0K0]^2 - 1/(4t^2)} t^3 dt.
Estimate ikmh443_estimate(Precision p, const QuadOptions& opt = {});
BigFloat ikmh443(Precision p);

/// Dispatches on the kernel. J0/Y0 kernels with x above the decay rate go through the
/// oscillatory integrator; power-law J0 integrands first subtract a model
/// t * sum_j d_j (1+t^2)^{-j-1} whose Hankel transforms x^j K_j(x)/(2^j j!) are exact.
Estimate offshell_moment(const MomentSpec& spec, Precision p, const QuadOptions& opt = {},
                         const OscillatoryOptions& osc = {});

/// Power-law J0/Y0 moment ([I0K0]^a t^m, m < a) summed over kernel-zero panels with Levin
/// extrapolation and no model subtraction. offshell_moment uses it for Y0.
Estimate power_law_levin(const MomentSpec& spec, const BigFloat& x, Precision p, const OscillatoryOptions& osc = {});

/// One term of a modified-kernel family: kernel(v t) [I0]^a [K0]^b t^m.
struct KernelTerm {
  KernelKind kernel = KernelKind::None;  // None, I0, I1, K0, K1
  int a = 0;
  int b = 0;
  int m = 1;
};

/// Integrates every term for one kernel scale v = sqrt(u) > 0 with one quadrature pass.
std::vector<Estimate> kernel_moments(const std::vector<KernelTerm>& terms, const BigFloat& v, Precision p,
                                     const QuadOptions& opt = {});

/// Coefficients p_k with I0(t)K0(t) ~ (1/(2t)) sum_k p_k t^{-2k}, from the product
/// of the I0 and K0 asymptotic series.
std::vector<exact::BigRational> i0k0_asymptotic_coefficients(int count);

/// Power-law combination sum_i c_i [I0K0]^{a_i} t^{m_i} integrated over (0, inf).
struct PowerLawTerm {
  exact::BigRational coeff;
  int a = 0;
  int m = 0;
};
Estimate power_law_moment(const std::vector<PowerLawTerm>& terms, Precision p, const QuadOptions& opt = {});

/// Cut point between numerical quadrature and the asymptotic tail.
long power_law_cut(Precision p);

/// int_T^inf of the asymptotic expansion of the combination, summed until the terms
/// drop below 2^-(p+32) relative. error holds the last term used.
Estimate power_law_tail(const std::vector<PowerLawTerm>& terms, const BigFloat& T, Precision p);

/// Coefficients d_j (j = r..r+count-1) of the J0 subtraction model for [I0K0]^a t^m with
/// m - a = -1 - 2r; matches the expansion through t^{m-a-2(count-1)}.
std::vector<exact::BigRational> hankel_model_coefficients(int a, int m, int count);

}  // namespace bmlab::mpnum
