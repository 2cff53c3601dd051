#include <doctest.h>

#include "bmlab/exact/errors.hpp"
#include "bmlab/mpnum/bigcomplex.hpp"
#include "bmlab/mpnum/constants.hpp"
#include "bmlab/mpnum/kluyver.hpp"
#include "bmlab/mpnum/moments.hpp"
#include "bmlab/mpnum/oscillatory.hpp"
#include "bmlab/mpnum/pslq.hpp"

using namespace bmlab::mpnum;
using bmlab::exact::BigInt;
using bmlab::exact::BigRational;

namespace {

bool below(const BigFloat& x, const BigFloat& bound) { return abs(x) < bound; }
BigFloat tenth(long e, Precision p) { return pow(BigFloat(10L, p), -e); }

}  // namespace

TEST_CASE("bigfloat basics and formatting") {
  const Precision p(128);
  CHECK(BigFloat(1L, p).to_string(5) == "1.0000e0");
  CHECK(BigFloat(-0.5, p).to_string(3) == "-5.00e-1");
  CHECK(BigFloat("1e-3", p).to_string(2) == "1.0e-3");
  BigFloat a(BigRational(1, 3), p);
  CHECK(below(a * 3L - 1L, BigFloat(1e-37, p)));
  CHECK((BigFloat(2L, Precision(64)) + BigFloat(1L, Precision(256))).precision().bits == 256);
  CHECK(BigFloat(3L, p) > 2L);
}

TEST_CASE("bigcomplex principal branch") {
  const Precision p(128);
  BigComplex z(BigFloat(-1L, p), BigFloat(0L, p));
  BigComplex r = sqrt(z);
  CHECK(below(r.re(), BigFloat(1e-35, p)));
  CHECK(below(r.im() - 1L, BigFloat(1e-35, p)));
  BigComplex e = expi(pi(p));
  CHECK(below(e.re() + 1L, BigFloat(1e-35, p)));
}

TEST_CASE("constants") {
  SUBCASE("pi self-consistent at two precisions") {
    const BigFloat a = pi(Precision(256));
    const BigFloat b = pi(Precision(512)).at(Precision(256));
    CHECK(a == b);
  }
  SUBCASE("exp(log 2) = 2") {
    const Precision p(384);
    CHECK(below(exp(log2_const(p)) - 2L, ldexp(BigFloat(1L, p), -(p.bits - 4))));
  }
  SUBCASE("bologna by name") {
    const Precision p(256);
    CHECK(constant("bologna", p) == constant(Constant::Bologna, p));
    CHECK_THROWS_AS(constant("zeta3", p), std::invalid_argument);
    // theta form: (pi/16)(1 - 1/sqrt5)(1 + 2 sum exp(-n^2 pi sqrt15))^4
    BigFloat theta(1L, p);
    for (long n = 1; n <= 6; ++n) theta += exp(-(pi(p) * sqrt(BigFloat(15L, p)) * (n * n))) * 2L;
    const BigFloat c = pi(p) / 16L * (BigFloat(1L, p) - BigFloat(1L, p) / sqrt(BigFloat(5L, p))) * theta * theta * theta * theta;
    CHECK(below(relative_difference(constant(Constant::Bologna, p), c), tenth(70, p)));
  }
}

TEST_CASE("bessel evaluation") {
  const Precision p(256);
  SUBCASE("tabulated values at t = 1") {
    const BigFloat one(1L, p);
    CHECK(below(bessel_eval(BesselKind::I0, one, p) - BigFloat("1.2660658777520083355982446252147175376076703113550", p), tenth(45, p)));
    CHECK(below(bessel_eval(BesselKind::K0, one, p) - BigFloat("0.42102443824070833333562737921260903613621974822667", p), tenth(45, p)));
    CHECK(below(bessel_eval(BesselKind::I1, one, p) - BigFloat("0.56515910399248502720769602760986330732889962162109", p), tenth(45, p)));
    CHECK(below(bessel_eval(BesselKind::K1, one, p) - BigFloat("0.60190723019723457473754000153561733926158688996811", p), tenth(45, p)));
  }
  SUBCASE("I0(0) = 1 and domain errors") {
    CHECK(bessel_eval(BesselKind::I0, BigFloat(0L, p), p) == 1L);
    CHECK(bessel_eval(BesselKind::J0, BigFloat(0L, p), p) == 1L);
    CHECK_THROWS_AS(bessel_eval(BesselKind::K0, BigFloat(0L, p), p), std::domain_error);
    CHECK_THROWS_AS(bessel_eval(BesselKind::Y0, BigFloat(0L, p), p), std::domain_error);
    CHECK_THROWS_AS(bessel_eval(BesselKind::I0, BigFloat(-1L, p), p), std::domain_error);
  }
  SUBCASE("Wronskian I0 K1 + I1 K0 = 1/t") {
    for (long bits : {256L, 512L}) {
      const Precision q(bits);
      for (const char* ts : {"0.5", "1", "10", "50"}) {
        const BigFloat t(ts, q);
        const auto s = modified_bessel_all(t, q);
        // I0 and K1 computed independently of the Wronskian via the separate evaluator
        const BigFloat i0 = bessel_eval(BesselKind::I0, t, q);
        const BigFloat i1 = bessel_eval(BesselKind::I1, t, q);
        const BigFloat w = i0 * s.k1 + i1 * s.k0 - BigFloat(1L, q) / t;
        CHECK(below(w * t, ldexp(BigFloat(1L, q), -(bits - 10))));
      }
    }
  }
  SUBCASE("small-t behaviour of K0") {
    const BigFloat t("1e-3", p);
    const BigFloat k0 = bessel_eval(BesselKind::K0, t, p);
    const BigFloat lhs = k0 + log(t / 2L) + euler_gamma(p);
    // remainder of the ascending series: (t^2/4)(1 - log(t/2) - gamma) + O(t^4 log t)
    const BigFloat x = t * t / 4L;
    const BigFloat lead = x * (BigFloat(1L, p) - log(t / 2L) - euler_gamma(p));
    CHECK(below(lhs - lead, x * x * 10L));
    CHECK(lhs > 0L);
  }
  SUBCASE("series and asymptotic regimes overlap") {
    const double th = bessel_asymptotic_threshold(p);
    for (double t : {th - 2.0, th + 3.0}) {
      const BigFloat tt(t, p);
      const auto a = detail::modified_bessel_series(tt, p);
      const auto b = detail::modified_bessel_asymptotic(tt, p);
      CHECK(below(relative_difference(a.i0, b.i0), ldexp(BigFloat(1L, p), -(p.bits - 12))));
      CHECK(below(relative_difference(a.k0, b.k0), ldexp(BigFloat(1L, p), -(p.bits - 12))));
      CHECK(below(relative_difference(a.k1, b.k1), ldexp(BigFloat(1L, p), -(p.bits - 12))));
    }
  }
  SUBCASE("kernel zeros") {
    const BigFloat z = bessel_zero(BesselKind::J0, 1, p);
    CHECK(below(z - BigFloat("2.4048255576957727686216318793264546431242449091460", p), tenth(45, p)));
    for (long k : {1L, 7L, 300L}) {
      CHECK(below(bessel_eval(BesselKind::Y0, bessel_zero(BesselKind::Y0, k, p), p), tenth(70, p)));
      CHECK(below(bessel_eval(BesselKind::J1, bessel_zero(BesselKind::J1, k, p), p), tenth(70, p)));
    }
  }
}

TEST_CASE("quadrature determinism and precision doubling") {
  const Precision p(192);
  QuadOptions serial;
  serial.policy = ExecPolicy::Serial;
  QuadOptions parallel;
  parallel.policy = ExecPolicy::Parallel;
  BesselTable::clear_cache();
  const Estimate a = ikm_estimate(1, 4, 1, p, serial);
  BesselTable::clear_cache();
  const Estimate b = ikm_estimate(1, 4, 1, p, parallel);
  CHECK(a.value == b.value);
  CHECK(a.error == b.error);

  const Estimate hi = ikm_estimate(1, 4, 1, Precision(384));
  CHECK(abs(a.value - hi.value) < a.error);
  const Estimate h1 = ikmh443_estimate(Precision(128));
  const Estimate h2 = ikmh443_estimate(Precision(256));
  CHECK(abs(h1.value - h2.value) < h1.error);
}

TEST_CASE("on-shell moments against closed forms") {
  const Precision p(256);
  const BigFloat pp = pi(p);
  const BigFloat C = constant(Constant::Bologna, p);
  const BigFloat tol = tenth(60, p);
  CHECK(below(relative_difference(ikm(1, 3, 1, p), pp * pp / 16L), tol));
  CHECK(below(relative_difference(ikm(2, 3, 1, p), sqrt(BigFloat(15L, p)) * pp / 2L * C), tol));
  CHECK(below(relative_difference(ikm(1, 4, 1, p), pp * pp * C), tol));
  const auto v = ikm_batch(2, 6, {1, 3}, p);
  CHECK(below(relative_difference(v[0].value, v[1].value * 72L), tol));
  // K0 moments: int K0^2 t dt = 1/2
  CHECK(below(ikm(0, 2, 1, p) - BigFloat(BigRational(1, 2), p), tol));
  CHECK_THROWS_AS(ikm(2, 2, 1, p), std::domain_error);
  CHECK_THROWS_AS(ikm(3, 2, 1, p), std::domain_error);
}

TEST_CASE("asymptotic series of I0 K0 and the honorary tail") {
  SUBCASE("coefficients equal ((2k-1)!!)^3 / (k! 8^k)") {
    const auto c = i0k0_asymptotic_coefficients(12);
    BigInt dfact = 1;
    for (int k = 0; k < 12; ++k) {
      if (k > 0) dfact *= (2 * k - 1);
      const BigInt den = BigInt(bmlab::exact::factorial(static_cast<unsigned>(k))) << static_cast<unsigned>(3 * k);
      BigRational expect(dfact * dfact * dfact, den);
      expect.canonicalize();
      CHECK(c[static_cast<size_t>(k)] == expect);
    }
  }
  SUBCASE("honorary integrand ~ 1/(64 t^3)") {
    const Precision p(192);
    const BigFloat t(100L, p);
    const auto s = modified_bessel_all(t, p);
    const BigFloat x = s.i0 * s.k0;
    const BigFloat f = x * x * (x * x - BigFloat(1L, p) / (t * t * 4L)) * t * t * t;
    CHECK(std::abs((f * t * t * t * 64L).to_double() - 1.0) < 1e-3);
  }
  SUBCASE("tail model against direct quadrature on [100, 200]") {
    const Precision p(192);
    const std::vector<PowerLawTerm> h{{BigRational(1), 4, 3}, {BigRational(-1, 4), 2, 1}};
    const Estimate t100 = power_law_tail(h, BigFloat(100L, p), p);
    const Estimate t200 = power_law_tail(h, BigFloat(200L, p), p);
    const auto f = [](const QuadNode& node, const ModifiedBesselSet& s, std::span<BigFloat> out) {
      const BigFloat x = s.i0 * s.k0;
      out[0] = x * x * (x * x * node.t * node.t * node.t - node.t / 4L);
    };
    const QuadResult q = integrate(*BesselTable::finite(100, 200, p), 1, f);
    CHECK(below(relative_difference(t100.value - t200.value, q.values[0]), tenth(45, p)));
  }
  SUBCASE("slowly decaying combinations are rejected") {
    CHECK_THROWS_AS(power_law_tail({{BigRational(1), 2, 1}}, BigFloat(50L, Precision(128)), Precision(128)), std::domain_error);
  }
}

TEST_CASE("honorary moment rule") {
  const Precision p(256);
  const BigFloat lhs = ikm(4, 4, 1, p) - ikmh443(p) * 72L;
  CHECK(below(lhs - log2_const(p) * 7L / 2L, tenth(60, p)));
}

TEST_CASE("convergence predicate") {
  CHECK(converges({KernelKind::None, 1, 4, 1, std::nullopt, false}));
  CHECK_FALSE(converges({KernelKind::None, 2, 2, 1, std::nullopt, false}));
  CHECK(converges({KernelKind::None, 4, 4, 1, std::nullopt, false}));
  CHECK(converges({KernelKind::None, 4, 4, 3, std::nullopt, true}));
  CHECK_FALSE(converges({KernelKind::None, 4, 4, 3, std::nullopt, false}));
  CHECK(converges({KernelKind::I0, 0, 4, 1, BigFloat(15L, Precision(64)), false}));
  CHECK_FALSE(converges({KernelKind::I0, 0, 4, 1, BigFloat(17L, Precision(64)), false}));
  CHECK(converges({KernelKind::J0, 2, 2, 1, BigFloat(1L, Precision(64)), false}));
  CHECK_FALSE(converges({KernelKind::J0, 2, 2, 3, BigFloat(1L, Precision(64)), false}));
  CHECK_FALSE(converges({KernelKind::K1, 1, 3, 0, BigFloat(1L, Precision(64)), false}));
}

TEST_CASE("off-shell moments") {
  const Precision p(256);
  SUBCASE("K kernel at u = 1 is on-shell") {
    const Estimate e = offshell_moment({KernelKind::K0, 2, 2, 1, BigFloat(1L, p), false}, p);
    CHECK(below(relative_difference(e.value, ikm(2, 3, 1, p)), tenth(60, p)));
  }
  SUBCASE("I kernel at u = 0 is on-shell") {
    const Estimate e = offshell_moment({KernelKind::I0, 1, 3, 1, BigFloat(0L, p), false}, p);
    CHECK(below(relative_difference(e.value, ikm(1, 3, 1, p)), tenth(60, p)));
  }
  SUBCASE("kernel_moments matches one-term calls") {
    const BigFloat v = sqrt(BigFloat(BigRational(1, 2), p));
    const auto both = kernel_moments({{KernelKind::I0, 0, 4, 1}, {KernelKind::K1, 1, 3, 2}}, v, p);
    const Estimate single = offshell_moment({KernelKind::I0, 0, 4, 1, BigFloat(BigRational(1, 2), p), false}, p);
    CHECK(below(relative_difference(both[0].value, single.value), tenth(60, p)));
  }
  SUBCASE("J0 and Y0 kernels, two routes at u = -1") {
    // int J0(t)[pi I0 K0]^2 t dt = int J0(t) K0^4 t dt - 2 pi int Y0(t) I0 K0^3 t dt
    const BigFloat one(1L, p);
    const BigFloat pp = pi(p);
    const Estimate lhs = offshell_moment({KernelKind::J0, 2, 2, 1, one, false}, p);
    const Estimate r1 = offshell_moment({KernelKind::J0, 0, 4, 1, one, false}, p);
    const Estimate r2 = offshell_moment({KernelKind::Y0, 1, 3, 1, one, false}, p);
    CHECK(below(relative_difference(lhs.value * pp * pp, r1.value - r2.value * pp * 2L), tenth(20, p)));
  }
  SUBCASE("power-law J0: Levin without subtraction against the subtracted route") {
    const BigFloat x(BigRational(1, 2), p);
    const MomentSpec spec{KernelKind::J0, 2, 2, 1, x, false};
    const Estimate sub = offshell_moment(spec, p);
    const Estimate lev = power_law_levin(spec, x, p);
    CHECK(below(relative_difference(sub.value, lev.value), tenth(25, p)));
    CHECK(converges({KernelKind::Y0, 2, 2, 1, x, false}));
    CHECK_FALSE(converges({KernelKind::Y0, 2, 2, 2, x, false}));
    CHECK_THROWS_AS(power_law_levin({KernelKind::I0, 2, 2, 1, x, false}, x, p), bmlab::UnsupportedError);
  }
  SUBCASE("Hankel model coefficients reproduce the expansion") {
    // [I0K0]^2 t ~ (1/4) t^-1 (1 + 1/(4t^2) + ...); model t/(1+t^2) (d_0) and t/(1+t^2)^2 (d_1)
    const auto d = hankel_model_coefficients(2, 1, 2);
    CHECK(d[0] == BigRational(1, 4));
    CHECK(d[1] == BigRational(1, 4) * BigRational(1, 4) + d[0]);
  }
}

TEST_CASE("Levin u-transform") {
  const Precision p(192);
  SUBCASE("alternating harmonic series -> log 2") {
    std::vector<BigFloat> s;
    BigFloat acc(p);
    for (long k = 0; k < 40; ++k) {
      acc += BigFloat((k % 2 == 0) ? 1L : -1L, p) / BigFloat(k + 1, p);
      s.push_back(acc);
    }
    CHECK(below(levin_u(s, 24) - log2_const(p), tenth(25, p)));
  }
  SUBCASE("sum 1/k^2 -> pi^2/6") {
    std::vector<BigFloat> s;
    BigFloat acc(p);
    for (long k = 1; k <= 40; ++k) {
      acc += BigFloat(1L, p) / BigFloat(k * k, p);
      s.push_back(acc);
    }
    CHECK(below(levin_u(s, 24) - pi(p) * pi(p) / 6L, tenth(18, p)));
  }
  CHECK_THROWS_AS(levin_u(std::vector<BigFloat>(3, BigFloat(1L, p)), 5), std::invalid_argument);
}

TEST_CASE("Kluyver densities") {
  const Precision p(256);
  CHECK(kluyver_p3(BigFloat(0L, p), p).value.is_zero());
  CHECK(kluyver_p7(BigFloat(0L, p), p).value.is_zero());
  CHECK_THROWS_AS(kluyver_p3(BigFloat(1L, p), p), std::domain_error);
  CHECK_THROWS_AS(kluyver_p7(BigFloat(2L, p), p), std::domain_error);
  const Estimate ik = kluyver_p7(BigFloat(1L, p), p);
  const Estimate direct = kluyver_direct(7, BigFloat(1L, p), p);
  CHECK(below(relative_difference(direct.value, ik.value), tenth(20, p)));
  const Estimate slope = p7_slope_direct(p);
  CHECK(below(relative_difference(slope.value, -ik.value / 4L), tenth(20, p)));
  SUBCASE("p7 at x < 1 is continuous towards x = 1") {
    const Estimate near = kluyver_p7(BigFloat(1L, p) - BigFloat("1e-6", p), p);
    CHECK(std::abs((near.value - ik.value).to_double()) < 1e-6);
  }
}

TEST_CASE("log-basis extrapolation recovers a synthetic limit") {
  const Precision p(192);
  std::vector<BigFloat> eps, vals;
  for (int k = 6; k <= 10; ++k) {
    const BigFloat e = ldexp(BigFloat(1L, p), -k);
    eps.push_back(e);
    vals.push_back(BigFloat(3L, p) + e * log(e) * 5L - e * 2L + e * e * log(e) + e * e * e);
  }
  CHECK(std::abs(extrapolate_log_basis(eps, vals).to_double() - 3.0) < 1e-7);
}

TEST_CASE("integer relations") {
  const Precision p(333);
  const auto v = ikm_batch(2, 3, {1, 3, 5}, p);
  const auto r = integer_relation({v[0].value, v[1].value, v[2].value}, p);
  REQUIRE(r.has_value());
  CHECK(*r == std::vector<BigInt>{16, -228, 45});
  const auto w = ikm_batch(2, 6, {1, 3}, p);
  const auto r2 = integer_relation({w[0].value, w[1].value}, p);
  REQUIRE(r2.has_value());
  CHECK(*r2 == std::vector<BigInt>{1, -72});
  const Precision q(256);
  const RelationSearch none = find_integer_relation({BigFloat(1L, q), sqrt(BigFloat(2L, q))}, q);
  CHECK_FALSE(none.relation.has_value());
  CHECK(none.norm_bound.to_double() > 1e6);
  CHECK_THROWS_AS(integer_relation({BigFloat(1L, q)}, q), std::invalid_argument);
}
