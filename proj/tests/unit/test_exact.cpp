#include <doctest.h>

#include <random>

#include "bmlab/exact/bessel_pair.hpp"
#include "bmlab/exact/diffop.hpp"
#include "bmlab/exact/json_io.hpp"
#include "bmlab/exact/log_series.hpp"

using namespace bmlab::exact;

namespace {

LaurentPoly tp(int e, long c = 1) { return LaurentPoly::monomial("t", e, c); }

DiffOp random_op(std::mt19937& rng, int max_order, int max_deg, int min_exp = 0) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> ord(0, max_order);
  std::vector<LaurentPoly> c(static_cast<size_t>(ord(rng)) + 1, LaurentPoly("t"));
  for (auto& p : c)
    for (int e = min_exp; e <= max_deg; ++e) p.add_term(e, BigRational(coef(rng), 1 + (e & 1)));
  return DiffOp("t", c);
}

LogSeries pow_series(const LogSeries& y1, const LogSeries& y2, int a, int b) {
  LogSeries r = LogSeries::from_power_series("t", 0, y1.order(), {BigRational(1)});
  for (int i = 0; i < a; ++i) r = r * y1;
  for (int i = 0; i < b; ++i) r = r * y2;
  return r;
}

}  // namespace

TEST_CASE("poly arithmetic and division") {
  Poly p("x", {1, -3, 2});  // (1-x)(1-2x)
  Poly q("x", {-1, 1});
  auto [quo, rem] = Poly::divmod(p, q);
  CHECK(rem.is_zero());
  CHECK(quo == Poly("x", {-1, 2}));
  CHECK(Poly::gcd(p, Poly("x", {1, -1}) * Poly("x", {5, 1})) == Poly("x", {-1, 1}));
  CHECK(p.substitute_power(2) == Poly("x", {1, 0, -3, 0, 2}));
  CHECK(p.substitute_affine(1, 1) == Poly("x", {0, 1, 2}));
  CHECK(p.eval(BigRational(1, 2)) == 0);
  CHECK(Poly("x", {6, 4, 2}).integer_content() == 2);
  CHECK_THROWS_AS(Poly::divmod(p, Poly("x")), std::domain_error);
  CHECK_THROWS_AS(p + Poly("y", {0, 1}), std::invalid_argument);
  CHECK(p.to_string() == "2*x^2 - 3*x + 1");
}

TEST_CASE("laurent polynomials") {
  LaurentPoly f = tp(-2, 3) + tp(1);
  CHECK(f.derivative() == tp(-3, -6) + tp(0));
  CHECK(f.eval(2) == BigRational(11, 4));
  CHECK_THROWS(f.to_poly());
  CHECK((f * tp(2)).to_poly() == Poly("t", {3, 0, 0, 1}));
  CHECK((f - f).is_zero());
}

TEST_CASE("bmw operator small cases") {
  // m=1 unrolled by hand: theta^2 - t^2 = t^2 D^2 + t D - t^2
  CHECK(bmw_operator(1) == DiffOp("t", {tp(2, -1), tp(1), tp(2)}));
  CHECK_THROWS_AS(bmw_operator(0), std::domain_error);
  for (int m = 1; m <= 8; ++m) {
    const DiffOp op = bmw_operator(m);
    CHECK(op.order() == m + 1);
    CHECK(op.has_polynomial_coefficients());
    for (const auto& c : op.coefficients())
      for (const auto& [e, q] : c.terms()) CHECK(q.get_den() == 1);
  }
}

TEST_CASE("formal adjoint") {
  CHECK(formal_adjoint(DiffOp::theta("t")) == DiffOp("t", {tp(0, -1), tp(1, -1)}));
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const DiffOp op = random_op(rng, 6, 6, trial % 3 == 0 ? -2 : 0);
    CHECK(formal_adjoint(formal_adjoint(op)) == op);
  }
}

TEST_CASE("composition is associative and matches sequential application") {
  std::mt19937 rng(77);
  const auto [y1, y2] = frobenius_solutions(30);
  const LogSeries s = y1 * y2 + y1;
  for (int trial = 0; trial < 10; ++trial) {
    const DiffOp a = random_op(rng, 3, 3), b = random_op(rng, 3, 3), c = random_op(rng, 2, 2);
    CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
    CHECK(a.compose(b + c) == a.compose(b) + a.compose(c));
    const LogSeries lhs = apply_to_log_series(a.compose(b), s);
    const LogSeries rhs = apply_to_log_series(a, apply_to_log_series(b, s));
    CHECK(lhs == rhs);
    CHECK(lhs.order() == rhs.order());
  }
}

TEST_CASE("frobenius solutions") {
  const auto [y1, y2] = frobenius_solutions(20);
  CHECK(y1.coeff(0, 0) == 1);
  CHECK(y1.coeff(0, 2) == BigRational(1, 4));
  CHECK(y1.coeff(0, 4) == BigRational(1, 64));
  CHECK(y1.coeff(0, 6) == BigRational(1, 2304));
  CHECK(y2.coeff(1, 2) == BigRational(1, 4));
  CHECK(y2.coeff(0, 0) == 0);
  CHECK(y2.coeff(0, 2) == BigRational(-1, 4));
  CHECK(y2.coeff(0, 4) == BigRational(-3, 128));

  const DiffOp bessel = bmw_operator(1);
  for (const auto* y : {&y1, &y2}) {
    const LogSeries r = apply_to_log_series(bessel, *y);
    CHECK(r.is_zero());
    CHECK(r.order() == 20);
  }
  const LogSeries ty1 = apply_to_log_series(DiffOp::theta("t"), y1);
  CHECK(ty1.coeff(0, 0) == 0);
  CHECK(ty1.coeff(0, 2) == BigRational(1, 2));
  CHECK(ty1.coeff(0, 4) == BigRational(1, 16));
  CHECK(apply_to_log_series(DiffOp::identity("t"), y2) == y2);
  CHECK_THROWS_AS(frobenius_solutions(3), std::domain_error);
}

TEST_CASE("apply_to_log_series rejects exhausted truncation") {
  const auto [y1, y2] = frobenius_solutions(4);
  DiffOp d4 = DiffOp::derivation("t").compose(DiffOp::derivation("t"));
  d4 = d4.compose(d4).compose(DiffOp::derivation("t"));
  CHECK_THROWS_AS(apply_to_log_series(d4, y1), std::domain_error);
}

TEST_CASE("symmetric power annihilation") {
  const auto [y1, y2] = frobenius_solutions(30);
  CHECK(apply_to_log_series(bmw_operator(3), y1 * y1 * y2).is_zero());
  for (int m = 2; m <= 4; ++m) {
    const DiffOp op = bmw_operator(m);
    for (int a = 0; a <= m; ++a) {
      const LogSeries r = apply_to_log_series(op, pow_series(y1, y2, a, m - a));
      CHECK(r.is_zero());
      CHECK(r.order() >= 30 - (m + 1));
    }
    // a non-product is not annihilated
    CHECK_FALSE(apply_to_log_series(op, y1 + y2.times(tp(1))).is_zero());
  }
}

TEST_CASE("bessel pair closure") {
  const BesselPairExpr ti{PairFlavor::I, LaurentPoly("t"), tp(1)};
  const BesselPairExpr dti = ti.derivative();
  CHECK(dti.c0 == tp(1));
  CHECK(dti.c1.is_zero());
  const BesselPairExpr k0{PairFlavor::K, tp(0), LaurentPoly("t")};
  const BesselPairExpr dk0 = k0.derivative();
  CHECK(dk0.c0.is_zero());
  CHECK(dk0.c1 == tp(0, -1));

  // d/dt[t^{2m+1} I1] = 2m t^{2m} I1 + t^{2m+1} I0, m = 2
  const BesselPairExpr e{PairFlavor::I, LaurentPoly("t"), tp(5)};
  const BesselPairExpr de = e.derivative();
  CHECK(de.c0 == tp(5));
  CHECK(de.c1 == tp(4, 4));
  // and the K analogue: d/dt[-t^{2m} K1 ... ] check via -t^{2m} K1 + 2m t^{2m-1} K0 = d/dt[t^{2m} K0]
  const BesselPairExpr ek{PairFlavor::K, tp(4), LaurentPoly("t")};
  CHECK(ek.derivative() == BesselPairExpr{PairFlavor::K, tp(3, 4), tp(4, -1)});

  // Second route: realise B0 by a Frobenius solution, B1 by +-B0', and differentiate the series.
  const auto [y1, y2] = frobenius_solutions(40);
  std::mt19937 rng(5);
  for (PairFlavor fl : {PairFlavor::I, PairFlavor::K}) {
    const LogSeries b0 = fl == PairFlavor::I ? y1 : y2;
    const LogSeries b1 = fl == PairFlavor::I ? b0.derivative() : b0.derivative() * LogSeries::from_power_series("t", 0, 40, {BigRational(-1)});
    for (int trial = 0; trial < 5; ++trial) {
      const DiffOp r = random_op(rng, 0, 4, -2);
      const DiffOp r2 = random_op(rng, 0, 4, -1);
      const BesselPairExpr x{fl, r.coeff(0), r2.coeff(0)};
      const auto realise = [&](const BesselPairExpr& p) { return b0.times(p.c0) + b1.times(p.c1); };
      CHECK(realise(x.derivative()) == realise(x).derivative());
    }
  }
}

TEST_CASE("apply_to_bessel_pair") {
  const BesselPairExpr inv_t{PairFlavor::I, tp(-1), LaurentPoly("t")};
  const BesselPairExpr r = apply_to_bessel_pair(formal_adjoint(bmw_operator(4)), inv_t);
  CHECK(r.c0.is_polynomial());
  CHECK(r.c1.is_polynomial());
  for (const auto& [e, c] : r.c0.terms()) CHECK(e % 2 == 1);
  for (const auto& [e, c] : r.c1.terms()) CHECK(e % 2 == 0);
}

TEST_CASE("json round trip") {
  const DiffOp op = formal_adjoint(bmw_operator(3)) + DiffOp::multiplication(tp(-1, 3));
  CHECK(diffop_from_json(to_json(op)) == op);
  const Poly p("xi", {BigRational(1, 3), BigRational(0), BigRational(-7, 2)});
  CHECK(poly_from_json(to_json(p)) == p);
  CHECK(to_json(p).dump() == R"({"coefficients":["1/3","0","-7/2"],"variable":"xi"})");
}
