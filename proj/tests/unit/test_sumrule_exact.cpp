#include <doctest.h>

#include <cctype>
#include <fstream>
#include <json.hpp>

#include "bmlab/exact/errors.hpp"
#include "bmlab/sumrule/sumrule.hpp"

using namespace bmlab::sumrule;
using bmlab::exact::parse_rational;

namespace {

nlohmann::json load_table1() {
  std::ifstream in(std::string(BMLAB_DATA_DIR) + "/table1.json");
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

Poly golden_poly(const nlohmann::json& e) {
  std::vector<BigRational> c;
  for (const auto& s : e.at("coefficients")) c.push_back(parse_rational(s.get<std::string>()));
  return Poly("xi", c) * parse_rational(e.at("scale").get<std::string>());
}

// Parses the printed form, e.g. "16(2-85t^{2}+72t^{4})", into a polynomial in xi = t^2.
Poly parse_printed(std::string text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '{' && ch != '}') s += ch;
  BigRational outer = 1;
  if (auto p = s.find('('); p != std::string::npos) {
    outer = parse_rational(s.substr(0, p));
    s = s.substr(p + 1, s.size() - p - 2);
  }
  std::vector<BigRational> c;
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') sign = s[i++] == '-' ? -1 : 1;
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    BigRational coef = j > i ? parse_rational(s.substr(i, j - i)) : BigRational(1);
    int e = 0;
    if (j < s.size() && s[j] == 't') {
      ++j;
      e = 1;
      if (j < s.size() && s[j] == '^') {
        size_t k = ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        e = std::stoi(s.substr(k, j - k));
      }
    }
    const size_t idx = static_cast<size_t>(e / 2);
    if (c.size() <= idx) c.resize(idx + 1);
    c[idx] += coef * sign;
    i = j;
  }
  return Poly("xi", c) * outer;
}

}  // namespace

TEST_CASE("golden file is self-consistent") {
  for (const auto& e : load_table1().at("entries"))
    CHECK(parse_printed(e.at("text").get<std::string>()) == golden_poly(e));
}

TEST_CASE("sum-rule polynomials reproduce the tabulated ones") {
  for (const auto& e : load_table1().at("entries")) {
    const int n = e.at("n").get<int>();
    CAPTURE(n);
    const SumRulePoly f = sumrule_poly(n);
    CHECK(f.f == golden_poly(e));
    CHECK(f.scale_denominator == n + 4);
    CHECK(f.f.degree() <= (n + 1) / 2);
    // empirical record: f_n(0) = 2^{n+1} and integrality for n <= 10
    CHECK(f.f.coeff(0) == BigRational(BigInt(1) << (n + 1)));
    CHECK(f.f.is_integral());
  }
  CHECK_THROWS_AS(sumrule_poly(0), std::domain_error);
}

TEST_CASE("derive_AB I and K sides agree") {
  for (int n = 3; n <= 13; ++n) {
    CAPTURE(n);
    ABPair ab;
    CHECK_NOTHROW(ab = derive_AB(n));
    CHECK(ab.A.degree() <= (n - 1) / 2);
    CHECK(ab.B.degree() <= (n - 2) / 2);
  }
  CHECK_THROWS_AS(derive_AB(2), std::domain_error);
}

TEST_CASE("moment recurrence m=1 matches K0 moments") {
  // M(s) = 2^{s-1} Gamma((s+1)/2)^2  =>  M(s+2)/M(s) = (s+1)^2
  const MomentRecurrence r = moment_recurrence(1);
  REQUIRE(r.terms.size() == 2);
  CHECK(r.terms[0].shift == 0);
  CHECK(r.terms[1].shift == 2);
  CHECK(r.terms[1].coeff == Poly("s", {1}));
  CHECK(r.terms[0].coeff == Poly("s", {-1, -2, -1}));
}

TEST_CASE("moment recurrence m=2 matches K0^2 moments") {
  // int K0^2 t^s = sqrt(pi) Gamma((s+1)/2)^3 / (4 Gamma(s/2+1))  =>  ratio (s+1)^3 / (4(s+2))
  const MomentRecurrence r = moment_recurrence(2);
  REQUIRE(r.terms.size() == 2);
  for (int s = 0; s < 8; ++s) {
    const BigRational ratio = BigRational((s + 1) * (s + 1) * (s + 1)) / BigRational(4 * (s + 2));
    CHECK(r.terms[0].coeff.eval(s) + r.terms[1].coeff.eval(s) * ratio == 0);
  }
}

TEST_CASE("recurrences for five and six factors match the tabulated families") {
  for (int m : {5, 6}) {
    CAPTURE(m);
    const MomentRecurrence r = moment_recurrence(m);
    CHECK(r.max_shift() == 6);
    const RecurrenceMatch match = match_tabulated_family(r, tabulated_recurrence_family(m));
    REQUIRE(match.matched);
    CHECK(match.alpha == 1);
    CHECK(match.lambda == -1);
    for (size_t j = 0; j < match.beta.size(); ++j) CHECK(match.beta[j] == BigRational(static_cast<long>(j) + 1));
    CHECK(match.substitution == "x = s + j + 1, lambda = -1");
  }
  CHECK_THROWS_AS(tabulated_recurrence_family(4), bmlab::UnsupportedError);
}

TEST_CASE("normalization of recurrences") {
  for (int m = 1; m <= 8; ++m) {
    const MomentRecurrence r = moment_recurrence(m);
    CHECK(r.terms.front().shift == 0);
    CHECK(sgn(r.terms.back().coeff.leading()) > 0);
    BigInt g = 0;
    for (const auto& t : r.terms) {
      CHECK(t.coeff.is_integral());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.integer_content().get_mpz_t());
    }
    CHECK(g == 1);
  }
}
