#include <doctest.h>

#include "bmlab/modular/modular.hpp"
#include "bmlab/mpnum/constants.hpp"
#include "bmlab/mpnum/moments.hpp"
#include "bmlab/mpnum/oscillatory.hpp"

using namespace bmlab;
using namespace bmlab::modular;
using exact::BigRational;

namespace {

const Precision P(192);

BigFloat rel(const BigComplex& a, const BigComplex& b) { return abs(a - b) / abs(b); }

BigFloat tiny(double v) { return BigFloat(v, P); }

BigComplex pt(const char* re, const char* im) { return BigComplex(BigFloat(re, P), BigFloat(im, P)); }

/// eta-quotient prod eta(k z)^{e_k} from directly multiplied products (no pentagonal series).
QSeries direct_quotient(const std::vector<std::pair<int, int>>& factors, int order) {
  QSeries out = QSeries::constant(1, order);
  BigRational lead = 0;
  for (const auto& [k, e] : factors) {
    out *= eta_product_direct(k, order).pow(e);
    lead += BigRational(k * e, 24);
  }
  return QSeries(lead, out.coeffs());
}

}  // namespace

TEST_CASE("eta q-series: pentagonal expansion against the direct product") {
  const QSeries e = eta_qseries(1, 50);
  CHECK(e.lead() == BigRational(1, 24));
  const std::vector<long> head = {1, -1, -1, 0, 0, 1, 0, 1};
  for (int k = 0; k < 8; ++k) CHECK(e.coeff(k) == head[static_cast<size_t>(k)]);
  CHECK(agree(QSeries(0, e.coeffs()), eta_product_direct(1, 50)));
  SUBCASE("scale 2 is the substitution q -> q^2") {
    const QSeries e2 = eta_qseries(2, 99);
    const QSeries sub = e.substitute(2);
    CHECK(e2.lead() == sub.lead());
    CHECK(agree(e2, sub));
  }
  SUBCASE("exponent arithmetic") {
    const QSeries den = eta_qseries(1, 30) * eta_qseries(3, 30);
    const QSeries q = (eta_qseries(2, 30) * eta_qseries(6, 30) * den.inverse()).pow(6);
    CHECK(q.lead() == 1);
  }
}

TEST_CASE("q-series arithmetic") {
  const QSeries a(BigRational(1, 3), {2, 1, -4, 7});
  const QSeries one = a * a.inverse();
  CHECK(one.lead() == 0);
  CHECK(agree(one, QSeries::constant(1, 4)));
  CHECK(agree(a.pow(-2) * a.pow(2), QSeries::constant(1, 4)));
  CHECK(agree(a.pow(3), a * a * a));
  // q d/dq q^{1/3}(2 + q) = (2/3) q^{1/3} + (4/3) q^{4/3}
  CHECK(a.q_derivative().coeff(0) == BigRational(2, 3));
  CHECK(a.q_derivative().coeff(1) == BigRational(4, 3));
  CHECK_THROWS_AS(a + QSeries(BigRational(1, 2), {1}), std::invalid_argument);
  const QSeries b(BigRational(-2, 3), {1, 5});
  const QSeries s = a + b;  // lead -2/3: 1, 5 + 2, ... truncated at the shorter end
  CHECK(s.lead() == BigRational(-2, 3));
  CHECK(s.order() == 2);
  CHECK(s.coeff(1) == 7);
}

TEST_CASE("modular objects") {
  const ModularObjects& m = modular_objects(200);
  CHECK(m.X63.lead() == 1);
  CHECK(m.Z63.lead() == 0);
  CHECK(m.f66.lead() == 1);
  CHECK(m.alpha3.lead() == 1);
  CHECK(m.Z63.coeff(0) == 1);
  CHECK(m.f66.coeff(0) == 1);
  CHECK(m.X63.coeff(0) == 1);
  CHECK(m.alpha3.coeff(0) == 27);
  CHECK(m.f66.order() == 200);
  SUBCASE("coefficients from directly multiplied products") {
    const int n = 80;
    const QSeries f = direct_quotient({{2, 9}, {3, 9}, {1, -3}, {6, -3}}, n) +
                      direct_quotient({{1, 9}, {6, 9}, {2, -3}, {3, -3}}, n);
    CHECK(agree(f, m.f66));
    CHECK(agree(direct_quotient({{1, 4}, {3, 4}, {2, -2}, {6, -2}}, n), m.Z63));
    CHECK(agree(direct_quotient({{2, 6}, {6, 6}, {1, -6}, {3, -6}}, n), m.X63));
  }
  SUBCASE("f66 from the Hauptmodul derivative") {
    CHECK(agree(m.Z63.pow(2) * m.X63.q_derivative(), m.f66));
  }
  CHECK_THROWS_AS(modular_objects(10), std::invalid_argument);
}

TEST_CASE("eta evaluation") {
  // eta(i) = Gamma(1/4) / (2 pi^{3/4})
  const BigFloat pi = mpnum::pi(P);
  const BigFloat expect = gamma(BigFloat(1L, P) / 4L) / (pow(pi, BigFloat(0.75, P)) * 2L);
  const BigComplex i1 = pt("0", "1");
  CHECK(rel(eta_eval(i1, P).value, BigComplex(expect)) < tiny(1e-55));
  SUBCASE("reduction at small imaginary part") {
    // eta(i/5) = sqrt(5) eta(5i)
    const EtaValue small = eta_eval(pt("0", "0.2"), P);
    CHECK(small.inversions >= 1);
    CHECK(rel(small.value, eta_eval(pt("0", "5"), P).value * sqrt(BigFloat(5L, P))) < tiny(1e-55));
  }
  SUBCASE("log derivative against a central difference") {
    const BigComplex tau = pt("0.3", "0.17");
    const BigComplex h = pt("1e-18", "0");
    const BigComplex fd = (eta_eval(tau + h, P).value - eta_eval(tau - h, P).value) / (BigFloat("2e-18", P));
    const EtaValue v = eta_eval(tau, P);
    CHECK(rel(v.logderiv * v.value, fd) < tiny(1e-30));
  }
  SUBCASE("one extra inversion agrees at boundary points") {
    for (const char* re : {"0", "0.2", "0.5"}) {
      const HalfPlanePoint z(pt(re, "0.26"));
      const BigComplex a = eval_modular(ModularObject::X63, z, P);
      const BigComplex b = eval_modular(ModularObject::X63, z, P, {.extra_inversion = true});
      CHECK(rel(a, b) < tiny(1e-50));
    }
  }
  SUBCASE("q-series and eta-product evaluations agree") {
    const HalfPlanePoint z(pt("0.5", "1"));
    const BigComplex q = z.q(P);
    const ModularObjects& m = modular_objects(200);
    CHECK(rel(m.X63.eval_body(q, P) * q, eval_modular(ModularObject::X63, z, P)) < tiny(1e-55));
    CHECK(rel(m.Z63.eval_body(q, P), eval_modular(ModularObject::Z63, z, P)) < tiny(1e-55));
    CHECK(rel(m.f66.eval_body(q, P) * q, eval_modular(ModularObject::F66, z, P)) < tiny(1e-55));
  }
  CHECK_THROWS_AS(HalfPlanePoint(pt("0", "-1")), std::domain_error);
}

TEST_CASE("transformation laws") {
  SUBCASE("X63(W6 z) 64 X63(z) = 1 at z = i/3") {
    const HalfPlanePoint z(pt("0", "0.333333333333333333333333333333333333333333333333333333333"));
    const BigComplex x = eval_modular(ModularObject::X63, z, P);
    const BigComplex xw = eval_modular(ModularObject::X63, HalfPlanePoint(apply_w6(z.z())), P);
    CHECK(rel(xw * x * 64L, BigComplex(BigFloat(1L, P))) < tiny(1e-55));
  }
  SUBCASE("Z63(W6 z) = -48 z^2 Z63(z) X63(z) at z = i/2") {
    const HalfPlanePoint z(pt("0", "0.5"));
    const BigComplex zz = eval_modular(ModularObject::Z63, z, P);
    const BigComplex x = eval_modular(ModularObject::X63, z, P);
    const BigComplex zw = eval_modular(ModularObject::Z63, HalfPlanePoint(apply_w6(z.z())), P);
    CHECK(rel(zw, z.z() * z.z() * zz * x * (-48L)) < tiny(1e-55));
  }
  SUBCASE("W3 at z = 1/2 + i/2") {
    const HalfPlanePoint z(pt("0.5", "0.5"));
    const HalfPlanePoint w(apply_w3(z.z()));
    CHECK(rel(eval_modular(ModularObject::X63, w, P), eval_modular(ModularObject::X63, z, P)) < tiny(1e-55));
    const BigComplex t = z.z() * 2L - BigComplex(BigFloat(1L, P));
    CHECK(rel(eval_modular(ModularObject::Z63, w, P), eval_modular(ModularObject::Z63, z, P) * t * t * (-3L)) <
          tiny(1e-55));
  }
  CHECK(f66_fricke_selftest(P) < tiny(1e-50));
}

TEST_CASE("alpha3 on the imaginary axis") {
  BigFloat prev(0L, P);
  for (const char* y : {"2", "1", "0.6", "0.4", "0.3"}) {
    const BigFloat a = eval_modular(ModularObject::Alpha3, HalfPlanePoint::imaginary(BigFloat(y, P)), P).re();
    CHECK(a > prev);
    CHECK(a < 1L);
    prev = a;
  }
  const BigFloat y("0.7", P), h("1e-18", P);
  auto alpha = [&](const BigFloat& yy) {
    return eval_modular(ModularObject::Alpha3, HalfPlanePoint::imaginary(yy), P).re();
  };
  // d/dz = -i d/dy on the axis
  const BigFloat fd = (alpha(y + h) - alpha(y - h)) / (h * 2L);
  const BigComplex d = alpha3_derivative(HalfPlanePoint::imaginary(y), P);
  CHECK(abs(d.re()) < tiny(1e-50));
  CHECK(abs(d.im() + fd) < tiny(1e-30));
}

TEST_CASE("L-values of f66") {
  const BigFloat pi = mpnum::pi(P);
  const BigFloat l1 = lvalue_f66(1, P), l2 = lvalue_f66(2, P), l3 = lvalue_f66(3, P);
  CHECK(relative_difference(l3, mpnum::ikm(4, 4, 1, P)) < tiny(1e-50));
  CHECK(relative_difference(l1 * pi * pi * 7L, l3 * 36L) < tiny(1e-50));
  SUBCASE("termwise values against quadrature of f66(iy) y^{s-1}") {
    const AxisIntegrals& a = axis_integrals(P);
    REQUIRE(a.converged);
    const BigFloat two_pi = pi * 2L;
    CHECK(relative_difference(a.f_moment[0] * two_pi, l1) < tiny(1e-50));
    CHECK(relative_difference(a.f_moment[1] * two_pi * two_pi, l2) < tiny(1e-50));
    CHECK(relative_difference(a.f_moment[2] * pow(two_pi, 3) / 2L, l3) < tiny(1e-50));
    // int f66(z)(7 + 72 z^2) dz along the axis vanishes
    const BigFloat comb = a.f_moment[0] * 7L - a.f_moment[2] * 72L;
    CHECK(abs(comb) / (a.f_moment[0] * 7L) < tiny(1e-50));
  }
  CHECK_THROWS_AS(lvalue_f66(4, P), std::invalid_argument);
}

TEST_CASE("modular weight integral k = 0 against the 8-Bessel moment") {
  const BigFloat pi = mpnum::pi(P);
  const BigComplex w0 = modular_weight_integral(0, P);
  CHECK(abs(w0.re()) < tiny(1e-60));
  // -(pi^5/(3i)) w0 = IKM(2,6;1)/72
  const BigFloat lhs = -pow(pi, 5) * w0.im() / 3L;
  CHECK(relative_difference(lhs, mpnum::ikm(2, 6, 1, P) / 72L) < tiny(1e-45));
  CHECK_THROWS_AS(modular_weight_integral(3, P), std::invalid_argument);
}

TEST_CASE("J0 and Y0 transforms of [I0K0]^2 on the imaginary axis") {
  // x = [2 eta(2z)eta(6z)/(eta(z)eta(3z))]^3 = sqrt(-u) at z = i
  const HalfPlanePoint z = HalfPlanePoint::imaginary(BigFloat(1L, P));
  const BigFloat x = 8 * sqrt(eval_modular(ModularObject::X63, z, P).re());
  const BigFloat Z = eval_modular(ModularObject::Z63, z, P).re();
  const BigFloat pp = mpnum::pi(P);
  const auto j = mpnum::offshell_moment({mpnum::KernelKind::J0, 2, 2, 1, x, false}, P);
  const auto y = mpnum::offshell_moment({mpnum::KernelKind::Y0, 2, 2, 1, x, false}, P);
  // pi z/(4i) Z and pi (z^2 + 1/6)/4 Z at z = i
  CHECK(relative_difference(j.value, pp / 4 * Z) < tiny(1e-25));
  CHECK(relative_difference(y.value, -5 * pp / 24 * Z) < tiny(1e-25));
}

TEST_CASE("Legendre function of degree -1/3") {
  CHECK(legendre_Pm13(BigFloat(1L, P), P) == 1L);
  SUBCASE("series and logarithmic expansion agree at the seam") {
    const BigFloat half(0.5, P);
    CHECK(relative_difference(hyp_third_series(half, P), hyp_third_near_one(half, P)) < tiny(1e-55));
    const BigFloat x("-0.1", P);  // zeta = 0.55
    const BigFloat direct = hyp_third_series(BigFloat("0.45", P), P);  // P(0.1)
    CHECK(relative_difference(legendre_Pm13(-x, P), direct) < tiny(1e-55));
  }
  SUBCASE("trigonometric closed form at theta = pi/2: P(0) = Gamma(1/2)/(Gamma(2/3) Gamma(5/6))") {
    const BigFloat expect = sqrt(mpnum::pi(P)) / (gamma(BigFloat(2L, P) / 3L) * gamma(BigFloat(5L, P) / 6L));
    CHECK(relative_difference(legendre_Pm13(BigFloat(0L, P), P), expect) < tiny(1e-55));
  }
  SUBCASE("moments") {
    const BigFloat pi = mpnum::pi(P);
    const BigFloat expect = -BigFloat(9L, P) * sqrt(BigFloat(3L, P)) / (pi * 4L);
    CHECK(relative_difference(legendre_moment(P), expect) < tiny(1e-50));
    // x P(x)^2 P(-x)^2 integrated over the whole interval without folding
    const Precision lo(128);
    const auto q = mpnum::integrate_panel(
        [&](const BigFloat& x) {
          const BigFloat a = legendre_Pm13(x, lo), b = legendre_Pm13(-x, lo);
          return x * a * a * b * b;
        },
        BigFloat("-0.999999999999", lo), BigFloat("0.999999999999", lo), lo);
    CHECK(abs(q.values[0]) < BigFloat(1e-25, lo));
  }
  CHECK_THROWS_AS(legendre_Pm13(BigFloat(-1L, P), P), std::domain_error);
}

TEST_CASE("base change identities") {
  for (const char* y : {"1", "0.5", "0.8"}) {
    CAPTURE(y);
    const auto certs = cz_basechange_check(BigFloat(y, P), P);
    REQUIRE(certs.size() == 3);
    for (const auto& c : certs) {
      CAPTURE(c.identity_id);
      CAPTURE(c.residual);
      CHECK(c.passed());
    }
  }
}

TEST_CASE("coefficient export") {
  const auto j = coefficients_json(30);
  CHECK(j["f66"]["coefficients"].size() == 30);
  CHECK(j["f66"]["coefficients"][1] == "4");
  CHECK(j["alpha3"]["leading_exponent"] == "1");
}
