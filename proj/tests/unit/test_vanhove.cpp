#include <doctest.h>

#include <random>

#include "bmlab/exact/errors.hpp"
#include "bmlab/exact/json_io.hpp"
#include "bmlab/mpnum/bessel.hpp"
#include "bmlab/vanhove/vanhove.hpp"

using namespace bmlab;
using namespace bmlab::vanhove;
using exact::LaurentPoly;
using mpnum::BigFloat;
using mpnum::Precision;

namespace {

Poly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), c(-5, 5);
  std::vector<BigRational> cs;
  for (int i = deg(rng); i >= 0; --i) cs.emplace_back(c(rng));
  return Poly("u", cs);
}

RatFunc random_ratfunc(std::mt19937& rng) {
  Poly d = random_poly(rng, 2);
  if (d.is_zero()) d = Poly::constant("u", 1);
  return RatFunc(random_poly(rng, 3), d);
}

}  // namespace

TEST_CASE("rational functions reduce and differentiate") {
  // (u^2 - 1)/(u - 1) = u + 1
  const RatFunc r(Poly("u", {-1, 0, 1}), Poly("u", {-1, 1}));
  CHECK(r.is_polynomial());
  CHECK(r == RatFunc(Poly("u", {1, 1})));
  const RatFunc inv(Poly::constant("u", 1), Poly("u", {0, 1}));
  CHECK(inv.derivative() == RatFunc(Poly::constant("u", -1), Poly("u", {0, 0, 1})));
  CHECK(inv.eval(BigRational(1, 2)) == 2);
  CHECK_THROWS_AS(inv.eval(0), std::domain_error);
}

TEST_CASE("log-adjoined field: differentiation is a derivation") {
  std::mt19937 rng(7);
  const RatFunc dl = reflection_log_derivative();
  for (int trial = 0; trial < 20; ++trial) {
    const LogElem f = LogElem(random_ratfunc(rng), dl) + LogElem(random_ratfunc(rng), dl) * LogElem::ell(dl);
    const LogElem g = LogElem(random_ratfunc(rng), dl) + LogElem(random_ratfunc(rng), dl) * LogElem::ell(dl) *
                                                             LogElem::ell(dl);
    CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
  }
  SUBCASE("ell' is the stored log derivative") {
    CHECK(LogElem::ell(dl).derivative() == LogElem(dl, dl));
    // 192 ell' = 3/u - 4/(u-4) + 1/(u-16), checked at u = 1
    CHECK(dl.eval(1) * 192 == BigRational(3) + BigRational(4, 3) - BigRational(1, 15));
  }
}

TEST_CASE("Vanhove catalog") {
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    const VanhoveOp op = vanhove_operator(n);
    CHECK(op.expanded.order() == n);
    CHECK(parity_holds(op));
    CHECK(op.expanded == expand_factored(op.factored));
  }
  SUBCASE("n = 2 standard form") {
    const DiffOp expect("u", {Poly("u", {-3, 1}), Poly("u", {9, -20, 3}), Poly("u", {0, 9, -10, 1})});
    CHECK(vanhove_operator(2).expanded == expect);
  }
  SUBCASE("n = 3: D^1 coefficient 7u^2 - 68u + 64") {
    CHECK(vanhove_operator(3).expanded.coeff(1) == LaurentPoly(Poly("u", {64, -68, 7})));
    CHECK(vanhove_operator(3).expanded.coeff(2) == LaurentPoly(Poly("u", {0, 192, -90, 6})));
  }
  SUBCASE("n = 4 explicit form") {
    const DiffOp& L = vanhove_operator(4).expanded;
    CHECK(L.coeff(4) == LaurentPoly(Poly("u", {0, 0, -225, 259, -35, 1})));
    CHECK(L.coeff(3) == LaurentPoly(Poly("u", {0, -900, 1554, -280, 10})));
    CHECK(L.coeff(2) == LaurentPoly(Poly("u", {-450, 1839, -518, 25})));
    CHECK(L.coeff(1) == LaurentPoly(Poly("u", {285, -196, 15})));
    CHECK(L.coeff(0) == LaurentPoly(Poly("u", {-5, 1})));
  }
  SUBCASE("a perturbed operator breaks parity") {
    VanhoveOp op = vanhove_operator(3);
    op.expanded += DiffOp::multiplication(LaurentPoly(Poly("u", {1})));
    CHECK_FALSE(parity_holds(op));
  }
  CHECK_THROWS_AS(vanhove_operator(6), UnsupportedError);
  CHECK_THROWS_AS(vanhove_operator(0), UnsupportedError);
}

TEST_CASE("reflection commutator") {
  const ReflectionCheck r = reflection_commutator();
  CHECK(r.log_free);
  CHECK(r.matches);
  REQUIRE(r.commutator.size() == 3);
  CHECK(r.commutator[2].coeff(0) == RatFunc(Poly("u", {0, 3})));
  CHECK(r.commutator[1].coeff(0) == RatFunc::constant("u", 3));
  // partial fractions of the D^0 coefficient, read off by residues
  const RatFunc c0 = r.commutator[0].coeff(0);
  const RatFunc sq4 = c0 * RatFunc(Poly("u", {16, -8, 1}));
  const RatFunc sq16 = c0 * RatFunc(Poly("u", {256, -32, 1}));
  CHECK(sq4.eval(4) == 2);
  CHECK(sq16.eval(16) == 8);
  CHECK(sq4.derivative().eval(4) == BigRational(1, 3));
  CHECK(sq16.derivative().eval(16) == BigRational(2, 3));
}

TEST_CASE("kernel calculus against finite differences") {
  const Precision p(256);
  const BigFloat v("0.7", p), t("1.3", p), h("1e-20", p);
  auto eval = [&](const KernelExpr& e, const BigFloat& vv, const BigFloat& tt) {
    const BigFloat x = vv * tt;
    const bool i = e.flavor == PairFlavor::I;
    const BigFloat b0 = mpnum::bessel_eval(i ? mpnum::BesselKind::I0 : mpnum::BesselKind::K0, x, p);
    const BigFloat b1 = mpnum::bessel_eval(i ? mpnum::BesselKind::I1 : mpnum::BesselKind::K1, x, p);
    BigFloat s(p);
    for (const auto& [ex, c] : e.c0.terms) s += BigFloat(c, p) * pow(vv, ex.first) * pow(tt, ex.second) * b0;
    for (const auto& [ex, c] : e.c1.terms) s += BigFloat(c, p) * pow(vv, ex.first) * pow(tt, ex.second) * b1;
    return s;
  };
  for (PairFlavor f : {PairFlavor::I, PairFlavor::K}) {
    const KernelExpr e = KernelExpr::kernel(f).d_dv().times(1, 2, 3);  // a mixed B0/B1 expression
    const BigFloat fd_v = (eval(e, v + h, t) - eval(e, v - h, t)) / (h * 2L);
    const BigFloat fd_t = (eval(e, v, t + h) - eval(e, v, t - h)) / (h * 2L);
    CHECK(abs(eval(e.d_dv(), v, t) - fd_v) < BigFloat(1e-30, p));
    CHECK(abs(eval(e.d_dt(), v, t) - fd_t) < BigFloat(1e-30, p));
    CHECK(abs(eval(e.d_du(), v, t) * v * 2L - fd_v) < BigFloat(1e-30, p));
  }
}

TEST_CASE("intertwining with the adjoint Bessel-product operator") {
  for (int n : {3, 4}) {
    CAPTURE(n);
    CHECK(intertwine_check(n, PairFlavor::I));
    CHECK(intertwine_check(n, PairFlavor::K));
  }
  SUBCASE("wrong order pairing fails") {
    const DiffOp L = vanhove_operator(3).expanded;
    const KernelExpr lhs = apply_u_operator(L, PairFlavor::I).times(0, 1, 1);
    const DiffOp adj = exact::formal_adjoint(exact::bmw_operator(5));
    const KernelExpr rhs = apply_t_operator(adj, KernelExpr::kernel(PairFlavor::I).times(0, -1, 1));
    CHECK_FALSE(lhs == rhs.times(0, 0, BigRational(-1, 8)));
  }
}

TEST_CASE("Vanhove constants and residuals") {
  CHECK(vanhove_constant(3, KernelSide::I, 1) == -3);
  CHECK(vanhove_constant(3, KernelSide::K, 1) == BigRational(3, 4));
  CHECK(vanhove_constant(4, KernelSide::I, 1) == BigRational(-15, 2));
  CHECK(vanhove_constant(4, KernelSide::K, 1) == BigRational(3, 2));
  CHECK(vanhove_constant(4, KernelSide::I, 3) == 0);
  CHECK_THROWS_AS(vanhove_constant(4, KernelSide::K, 3), UnsupportedError);

  const Precision p(256);
  CHECK(vanhove_residual(3, KernelSide::I, 1, BigFloat(1L, p), p).passed());
  CHECK(vanhove_residual(3, KernelSide::I, 2, BigFloat(BigRational(1, 2), p), p).passed());
  CHECK(vanhove_residual(4, KernelSide::K, 1, BigFloat(2L, p), p).passed());
  CHECK(vanhove_residual(4, KernelSide::I, 3, BigFloat(BigRational(1, 2), p), p).passed());
  CHECK_THROWS_AS(vanhove_residual(3, KernelSide::I, 2, BigFloat(5L, p), p), std::domain_error);
  CHECK_THROWS_AS(vanhove_residual(4, KernelSide::I, 3, BigFloat(1L, p), p), std::domain_error);

  SUBCASE("a non-annihilated moment maps to its constant, not to zero") {
    auto c = vanhove_residual(3, KernelSide::I, 1, BigFloat(1L, p), p);
    CHECK(std::abs(std::stod(c.lhs) + 3.0) < 1e-15);
  }
}

TEST_CASE("small-u asymptotics follow the next-order models") {
  const Precision p(192);
  CHECK(asymptote_check(AsymptoteCase::IvKM231_small, BigFloat("-1e-6", p), p).passed());
  CHECK(asymptote_check(AsymptoteCase::IvKM321_small, BigFloat("-1e-6", p), p).passed());
  const auto c = asymptote_check(AsymptoteCase::IKvM231_small, BigFloat("1e-6", p), p);
  CHECK(c.passed());
  CHECK_THROWS_AS(asymptote_check(AsymptoteCase::IKvM231_small, BigFloat("-1e-6", p), p), std::domain_error);
}

TEST_CASE("large-u asymptotics") {
  const Precision p(192);
  CHECK(asymptote_check(AsymptoteCase::IvKM231_large, BigFloat("-1e6", p), p).passed());
  CHECK(asymptote_check(AsymptoteCase::IvKM321_large, BigFloat("-1e6", p), p).passed());
}

TEST_CASE("catalog export round-trips") {
  const auto j = catalog_json();
  REQUIRE(j.size() == 5);
  for (int n = 1; n <= 5; ++n)
    CHECK(exact::diffop_from_json(j[static_cast<size_t>(n - 1)]["operator"]) == vanhove_operator(n).expanded);
}
