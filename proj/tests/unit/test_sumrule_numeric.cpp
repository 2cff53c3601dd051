#include <doctest.h>

#include "bmlab/mpnum/moments.hpp"
#include "bmlab/sumrule/verify.hpp"

using namespace bmlab;
using mpnum::BigFloat;
using mpnum::Precision;

TEST_CASE("vacuum sum rules") {
  const Precision p(256);
  SUBCASE("n = 3 gives 24") {
    const auto c = sumrule::verify_sumrule(3, 0, p);
    CHECK(c.passed());
    CHECK(c.rhs.rfind("2.4000", 0) == 0);
  }
  SUBCASE("n = 4 gives 5! = 16 * 15/2") {
    // independent route: int K0^6 t (2 - 85 t^2 + 72 t^4) dt = 15/2
    const auto m = mpnum::ikm_batch(0, 6, {1, 3, 5}, p);
    const BigFloat v = m[0].value * 2L - m[1].value * 85L + m[2].value * 72L;
    CHECK(abs(v - BigFloat(exact::BigRational(15, 2), p)) < BigFloat(1e-60, p));
    CHECK(sumrule::verify_sumrule(4, 0, p).passed());
  }
}

TEST_CASE("homogeneous sum rules for n <= 6") {
  const Precision p(256);
  for (int n = 1; n <= 6; ++n)
    for (int a = 1; 2 * a < n + 2; ++a) {
      CAPTURE(n);
      CAPTURE(a);
      const auto c = sumrule::verify_sumrule(n, a, p);
      CHECK(c.passed());
      CHECK(c.rhs == "0");
    }
}

TEST_CASE("sum rule preconditions") {
  CHECK_THROWS_AS(sumrule::verify_sumrule(4, 3, Precision(128)), std::domain_error);
  CHECK_THROWS_AS(sumrule::verify_sumrule(0, 0, Precision(128)), std::domain_error);
}

TEST_CASE("a wrong weight fails the certificate") {
  // f_1 perturbed: (4 - 3 xi) + 1e-3
  const Precision p(192);
  const auto m = mpnum::ikm_batch(1, 2, {1, 3}, p);
  const BigFloat v = m[0].value * 4L - m[1].value * 3L + m[0].value * BigFloat(1e-3, p);
  const auto c = cli::scaled_zero_certificate("perturbed", v, m[0].value, {1e-20, true}, p.bits, 0);
  CHECK_FALSE(c.passed());
}

TEST_CASE("moment recurrences annihilate numeric moments") {
  const Precision p(256);
  const BigFloat tol(1e-30, p);
  for (int m = 1; m <= 7; ++m) {
    const auto rec = sumrule::moment_recurrence(m);
    for (int a = 0; 2 * a < m; ++a) {
      CAPTURE(m);
      CAPTURE(a);
      CHECK(sumrule::recurrence_residual(rec, a, m - a, {1, 2, 3}, p) < tol);
    }
  }
}

TEST_CASE("a recurrence for the wrong factor count does not annihilate") {
  const Precision p(192);
  auto rec = sumrule::moment_recurrence(5);
  rec.factor_count = 6;
  CHECK(sumrule::recurrence_residual(rec, 1, 5, {1}, p) > BigFloat(1e-10, p));
}
