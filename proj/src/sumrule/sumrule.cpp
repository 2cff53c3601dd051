#include "bmlab/sumrule/sumrule.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "bmlab/exact/bessel_pair.hpp"
#include "bmlab/exact/errors.hpp"

namespace bmlab::sumrule {

using exact::BesselPairExpr;
using exact::LaurentPoly;
using exact::PairFlavor;

namespace {

// Reads (A, B) from c0 = scale*t*A(t^2), c1 = sign*scale*t^2*B(t^2).
ABPair read_shape(int n, const BesselPairExpr& r, int sign, const char* side) {
  const BigRational scale = n - 1;
  auto fail = [&](const std::string& why) {
    throw InternalConsistencyError("derive_AB(" + std::to_string(n) + ", " + side + "): " + why);
  };
  if (!r.c0.is_polynomial() || !r.c1.is_polynomial()) fail("negative powers of t");
  std::vector<BigRational> a, b;
  for (const auto& [e, c] : r.c0.terms()) {
    if (e % 2 != 1) fail("I0/K0 coefficient is not odd in t");
    const BigRational q = c / scale;
    if (q.get_den() != 1) fail("I0/K0 coefficient not divisible by n-1");
    const size_t k = static_cast<size_t>((e - 1) / 2);
    if (a.size() <= k) a.resize(k + 1);
    a[k] = q;
  }
  for (const auto& [e, c] : r.c1.terms()) {
    if (e % 2 != 0 || e < 2) fail("I1/K1 coefficient is not t^2 times an even polynomial");
    const BigRational q = c / (scale * sign);
    if (q.get_den() != 1) fail("I1/K1 coefficient not divisible by n-1");
    const size_t k = static_cast<size_t>((e - 2) / 2);
    if (b.size() <= k) b.resize(k + 1);
    b[k] = q;
  }
  ABPair out{n, Poly("xi", a), Poly("xi", b)};
  if (out.A.degree() > (n - 1) / 2) fail("deg A too large");
  if (out.B.degree() > (n - 2) / 2) fail("deg B too large");
  return out;
}

Poly falling_factorial(int k) {
  Poly p = Poly::constant("s", 1);
  for (int i = 0; i < k; ++i) p *= Poly("s", {-i, 1});
  return p;
}

}  // namespace

const Poly* MomentRecurrence::at_shift(int shift) const {
  for (const auto& t : terms)
    if (t.shift == shift) return &t.coeff;
  return nullptr;
}

ABPair derive_AB(int n) {
  if (n < 3) throw std::domain_error("derive_AB: n must be >= 3");
  const DiffOp adj = exact::formal_adjoint(exact::bmw_operator(n));
  const LaurentPoly inv_t = LaurentPoly::monomial("t", -1);
  const BesselPairExpr ri = exact::apply_to_bessel_pair(adj, {PairFlavor::I, inv_t, LaurentPoly("t")});
  const BesselPairExpr rk = exact::apply_to_bessel_pair(adj, {PairFlavor::K, inv_t, LaurentPoly("t")});
  ABPair i_side = read_shape(n, ri, +1, "I");
  ABPair k_side = read_shape(n, rk, -1, "K");
  if (!(i_side.A == k_side.A) || !(i_side.B == k_side.B))
    throw InternalConsistencyError("derive_AB(" + std::to_string(n) + "): I-side and K-side disagree");
  return i_side;
}

SumRulePoly sumrule_poly(int n) {
  if (n < 1) throw std::domain_error("sumrule_poly: n must be >= 1");
  const ABPair ab = derive_AB(n + 3);
  const BigRational sign = ((n + 3) % 2 == 0) ? 1 : -1;
  SumRulePoly out{n, ab.B * (sign / BigRational(n + 4)), n + 4};
  if (out.f.degree() > (n + 1) / 2) throw InternalConsistencyError("sumrule_poly: degree bound violated");
  if (!(out.f * BigRational(n + 4)).is_integral())
    throw InternalConsistencyError("sumrule_poly: (n+4) f_n is not integral");
  return out;
}

MomentRecurrence moment_recurrence(int m) {
  if (m < 1) throw std::domain_error("moment_recurrence: m must be >= 1");
  // int t^s L F = int (L* t^s) F and L* t^s = sum_k mu_k(t) (s)_k t^{s-k}
  const DiffOp adj = exact::formal_adjoint(exact::bmw_operator(m));
  std::map<int, Poly> by_shift;
  for (int k = 0; k <= adj.order(); ++k) {
    const Poly ff = falling_factorial(k);
    for (const auto& [e, c] : adj.coeff(k).terms()) {
      auto [it, ins] = by_shift.try_emplace(e - k, Poly("s"));
      it->second += ff * c;
    }
  }
  MomentRecurrence rec{m, {}};
  const int low = by_shift.begin()->first;
  for (auto& [shift, p] : by_shift) {
    if (p.is_zero()) continue;
    // M(s + shift) with s -> s - low
    rec.terms.push_back({shift - low, p.substitute_affine(1, -low)});
  }
  BigInt lcm = 1, content = 0;
  for (const auto& t : rec.terms) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.coeff.denominator_lcm().get_mpz_t());
  for (auto& t : rec.terms) {
    t.coeff *= BigRational(lcm);
    const BigInt g = t.coeff.integer_content();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), g.get_mpz_t());
  }
  BigRational norm = BigRational(1) / BigRational(content);
  if (sgn(rec.terms.back().coeff.leading()) < 0) norm = -norm;
  for (auto& t : rec.terms) t.coeff *= norm;
  return rec;
}

std::vector<Poly> tabulated_recurrence_family(int m) {
  const std::string x = "x";
  if (m == 5) return {Poly(x, {0, 0, 0, 0, 0, 0, 1}), Poly(x, {3, 0, 42, 0, 35}), Poly(x, {104, 0, 259}), Poly(x, {225})};
  if (m == 6)
    return {Poly(x, {0, 0, 0, 0, 0, 0, 0, 1}), Poly(x, {0, 24, 0, 112, 0, 56}), Poly(x, {0, 944, 0, 784}), Poly(x, {0, 2304})};
  throw UnsupportedError("tabulated_recurrence_family: only m = 5, 6 are tabulated");
}

RecurrenceMatch match_tabulated_family(const MomentRecurrence& rec, const std::vector<Poly>& family) {
  const std::vector<BigRational> alphas = {1, 2, BigRational(1, 2)};
  for (const auto& alpha : alphas)
    for (int b0 = -3; b0 <= 3; ++b0)
      for (int b1 = -2; b1 <= 2; ++b1) {
        RecurrenceMatch m;
        bool ok = true;
        for (size_t j = 0; j < family.size() && ok; ++j) {
          const Poly* c = rec.at_shift(2 * static_cast<int>(j));
          if (c == nullptr) {
            ok = false;
            break;
          }
          const BigRational beta = b0 + b1 * static_cast<long>(j);
          const BigRational sign = (j % 2 == 0) ? 1 : -1;
          // x = alpha*s + beta  =>  p(x) as a polynomial in s
          const Poly ps = family[j].with_variable("s").substitute_affine(alpha, beta) * sign;
          if (ps.degree() != c->degree()) {
            ok = false;
            break;
          }
          const BigRational lam = c->leading() / ps.leading();
          if (!(ps * lam == *c) || (j > 0 && lam != m.lambda)) ok = false;
          m.lambda = lam;
          m.beta.push_back(beta);
        }
        if (ok && rec.terms.size() == family.size()) {
          m.matched = true;
          m.alpha = alpha;
          std::ostringstream os;
          os << "x = " << (alpha == 1 ? "" : exact::to_string(alpha) + "*") << "s";
          if (b1 != 0) os << (b1 > 0 ? " + " : " - ") << (std::abs(b1) == 1 ? "" : std::to_string(std::abs(b1)) + "*") << "j";
          if (b0 != 0) os << (b0 > 0 ? " + " : " - ") << std::abs(b0);
          os << ", lambda = " << exact::to_string(m.lambda);
          m.substitution = os.str();
          return m;
        }
      }
  return {};
}

}  // namespace bmlab::sumrule
