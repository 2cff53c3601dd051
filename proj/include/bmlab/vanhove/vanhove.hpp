#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bmlab/cli/certificate.hpp"
#include "bmlab/exact/bessel_pair.hpp"
#include "bmlab/exact/diffop.hpp"
#include "bmlab/mpnum/bigfloat.hpp"
#include "bmlab/vanhove/log_field.hpp"

namespace bmlab::vanhove {

using exact::DiffOp;
using exact::PairFlavor;

/// D^outer o P o D^inner, or D^outer o sqrt(P) o D o sqrt(P) o D^inner when root_pair is set.
struct FactoredBlock {
  int outer = 0;
  Poly p{"u"};
  bool root_pair = false;
  int inner = 0;

  std::string to_string() const;
};

struct VanhoveOp {
  int n = 0;
  std::vector<FactoredBlock> factored;
  DiffOp expanded{"u"};

  std::string factored_string() const;
};

/// Expands a sum of factored blocks into standard form (polynomial coefficients in u).
DiffOp expand_factored(const std::vector<FactoredBlock>& blocks);

/// Catalog entry for 1 <= n <= 5; checks expansion and parity on construction.
/// Throws UnsupportedError outside the catalog.
VanhoveOp vanhove_operator(int n);

/// formal_adjoint(expanded) == (-1)^n expanded.
bool parity_holds(const VanhoveOp& op);

/// d/du of the logarithm ell(u) = (3 log(-u) - 4 log(4-u) + log(16-u)) / 192.
RatFunc reflection_log_derivative();

struct ReflectionCheck {
  std::vector<LogElem> commutator;  // coefficient of D^k
  std::vector<RatFunc> expected;    // 3(u D^2 + D) + [2/(u-4)^2 + 1/(3(u-4)) + 8/(u-16)^2 + 2/(3(u-16))] D^0
  bool log_free = false;
  bool matches = false;
};

/// [L3, ell(u) D^0] in the log-adjoined field.
ReflectionCheck reflection_commutator();

// ---------------------------------------------------------------- kernel calculus

/// Finite sum of c * v^i * t^j; exponents may be negative.
struct BiLaurent {
  std::map<std::pair<int, int>, BigRational> terms;

  void add(int i, int j, const BigRational& c);
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const BiLaurent& a, const BiLaurent& b) { return a.terms == b.terms; }
};

/// c0(v,t) B0(v t) + c1(v,t) B1(v t) for the I or K pair.
struct KernelExpr {
  PairFlavor flavor = PairFlavor::I;
  BiLaurent c0, c1;

  static KernelExpr kernel(PairFlavor f);  // B0(v t)
  KernelExpr d_dv() const;
  KernelExpr d_dt() const;
  /// d/du with u = v^2, i.e. (1/(2v)) d/dv.
  KernelExpr d_du() const;
  KernelExpr times(int vpow, int tpow, const BigRational& c) const;
  KernelExpr& operator+=(const KernelExpr& o);
  friend bool operator==(const KernelExpr& a, const KernelExpr& b) {
    return a.flavor == b.flavor && a.c0 == b.c0 && a.c1 == b.c1;
  }
};

/// sum_k c_k(u) D_u^k applied to B0(sqrt(u) t).
KernelExpr apply_u_operator(const DiffOp& op, PairFlavor f);

/// sum_k mu_k(t) D_t^k applied to e.
KernelExpr apply_t_operator(const DiffOp& op, const KernelExpr& e);

/// t * L_n[B0(v t)] == (-1)^n / 2^n * adj(bmw(n+1))[B0(v t) / t], symbolically, for both pairs.
bool intertwine_check(int n);
bool intertwine_check(int n, PairFlavor f);

// ---------------------------------------------------------------- numeric checks

enum class KernelSide { I, K };

/// Right-hand constant of L_n applied to the off-shell moment with a I0 factors
/// (kernel included for side I) and n + 2 - a K0 factors (kernel included for side K).
/// Throws UnsupportedError if (side, a) has no constant.
BigRational vanhove_constant(int n, KernelSide side, int a);

/// L_n applied by differentiating the kernel under the integral sign, evaluated at u.
cli::Certificate vanhove_residual(int n, KernelSide side, int a, const mpnum::BigFloat& u, mpnum::Precision p,
                                  cli::Tolerance tol = {1e-20, false});

enum class AsymptoteCase {
  IvKM231_small,  // u -> 0-:  pi^2/16 (1 + u/16)
  IvKM231_large,  // u -> -inf: -3 log^2(-1/u) / (4u)
  IvKM321_small,  // u -> 0-:  -log(-u/64)/8 (1 + u/16)
  IvKM321_large,  // u -> -inf: log(-1/u)/u
  IKvM231_small,  // u -> 0+:  log^2(4/u)/32
};

std::string asymptote_name(AsymptoteCase c);

/// Large |u|: residual = ratio - 1, tolerance 0.1.
/// Small |u|: residual = |value - corrected| / |value - leading|, tolerance 0.1, where the corrected
/// model adds the next order (for IKvM231: log^2(64/u)/32 + pi^2/96).
cli::Certificate asymptote_check(AsymptoteCase which, const mpnum::BigFloat& u, mpnum::Precision p);

/// Off-shell moment with I0(sqrt(u) t) (J0(sqrt(-u) t) for u < 0) times I0^{a-1} K0^b t^m.
mpnum::BigFloat ivkm(int a, int b, int m, const mpnum::BigFloat& u, mpnum::Precision p);
/// Off-shell moment with K0(sqrt(u) t) times I0^a K0^{b-1} t^m, u > 0.
mpnum::BigFloat ikvm(int a, int b, int m, const mpnum::BigFloat& u, mpnum::Precision p);

/// Catalog n = 1..5 as JSON: factored string plus the canonical DiffOp form.
nlohmann::json catalog_json();

}  // namespace bmlab::vanhove
