#include <json.hpp>

#include <fstream>
#include <memory>
#include <stdexcept>

#include "bmlab/exact/diffop.hpp"
#include "bmlab/exact/log_series.hpp"
#include "bmlab/mpnum/bigfloat.hpp"
#include "bmlab/sumrule/sumrule.hpp"
#include "bmlab/sumrule/verify.hpp"
#include "bmlab/vanhove/vanhove.hpp"
#include "suite_items.hpp"

namespace bmlab::cli::detail {

using exact::BigRational;
using exact::LogSeries;
using exact::Poly;

namespace {

constexpr int kBmwTrunc = 60;

nlohmann::json load_table(const std::string& dir) {
  const std::string path = dir + "/table1.json";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return nlohmann::json::parse(in);
}

Poly golden_poly(const nlohmann::json& e) {
  std::vector<BigRational> c;
  for (const auto& s : e.at("coefficients")) c.push_back(exact::parse_rational(s.get<std::string>()));
  return Poly("xi", c) * exact::parse_rational(e.at("scale").get<std::string>());
}

std::string id2(const char* prefix, int m) { return std::string(prefix) + std::to_string(m); }

}  // namespace

ItemList table1_items(const SuiteConfig& cfg) {
  ItemList list;
  const nlohmann::json table = load_table(cfg.data_dir);
  for (const auto& e : table.at("entries")) {
    const int n = e.at("n").get<int>();
    const Poly golden = golden_poly(e);
    const std::string text = e.at("text").get<std::string>();
    list.add1(id2("table1.f", n), [n, golden, text] {
      const sumrule::SumRulePoly f = sumrule::sumrule_poly(n);
      Certificate c = exact_certificate(n < 10 ? "table1.f0" + std::to_string(n) : "table1.f" + std::to_string(n),
                                        f.f.to_string(), golden.to_string(), f.f == golden, 0,
                                        {"sum-rule weight polynomial in xi = t^2"});
      c.note = "tabulated as " + text;
      return c;
    });
  }
  return list;
}

ItemList bmw_items(const SuiteConfig&) {
  ItemList list;
  auto basis = std::make_shared<std::pair<LogSeries, LogSeries>>(exact::frobenius_solutions(kBmwTrunc));
  for (int m = 1; m <= 7; ++m) {
    list.add(id2("bmw.m", m), [m, basis] {
      const auto& [y1, y2] = *basis;
      const exact::DiffOp op = exact::bmw_operator(m);
      std::vector<Certificate> out;
      // y1^a y2^(m-a) built incrementally from y2^m
      std::vector<LogSeries> y2pow{LogSeries::from_power_series("t", 0, y1.order(), {BigRational(1)})};
      for (int k = 1; k <= m; ++k) y2pow.push_back(y2pow.back() * y2);
      LogSeries y1pow = y2pow[0];
      for (int a = 0; a <= m; ++a) {
        if (a > 0) y1pow = y1pow * y1;
        const LogSeries r = exact::apply_to_log_series(op, y1pow * y2pow[static_cast<size_t>(m - a)]);
        const std::string id = "bmw.m" + std::to_string(m) + ".a" + std::to_string(a);
        out.push_back(exact_certificate(id,
                                        "L_" + std::to_string(m + 1) + "[y1^" + std::to_string(a) + " y2^" +
                                            std::to_string(m - a) + "]",
                                        "O(t^" + std::to_string(r.order()) + ")", r.is_zero(), kBmwTrunc,
                                        {"symmetric-power annihilator on Frobenius products"}));
      }
      return out;
    });
  }
  return list;
}

ItemList recurrence_items(const SuiteConfig& cfg) {
  ItemList list;
  const mpnum::Precision p(cfg.precision_bits);
  const Tolerance tol{1e-30, true};
  for (int m : {5, 6}) {
    list.add1(id2("recurrence.family.m", m), [m] {
      const auto rec = sumrule::moment_recurrence(m);
      const auto match = sumrule::match_tabulated_family(rec, sumrule::tabulated_recurrence_family(m));
      return exact_certificate("recurrence.m" + std::to_string(m) + ".family",
                               match.matched ? match.substitution : "no affine substitution found",
                               "tabulated p_{" + std::to_string(m) + ",j}, j = 0..3", match.matched, 0,
                               {"Mellin transform of the symmetric-power annihilator"});
    });
  }
  struct Seq {
    int a, b;
  };
  for (Seq s : {Seq{1, 4}, Seq{2, 3}, Seq{0, 5}, Seq{0, 6}}) {
    const std::string tag = "IKM" + std::to_string(s.a) + std::to_string(s.b);
    list.add1("recurrence." + tag, [s, tag, p, tol] {
      const auto rec = sumrule::moment_recurrence(s.a + s.b);
      const mpnum::BigFloat r = sumrule::recurrence_residual(rec, s.a, s.b, {1, 2, 3}, p);
      Certificate c = scaled_zero_certificate("recurrence.m" + std::to_string(s.a + s.b) + ".residual." + tag, r,
                                              mpnum::BigFloat(p), tol, p.bits, 0,
                                              {"moment recurrence on computed moments"});
      c.relative = true;
      c.note = "max over s = 1, 2, 3 of |sum c_j M(s+j)| / sum |c_j M(s+j)|";
      return c;
    });
  }
  return list;
}

ItemList reflection_items(const SuiteConfig&) {
  ItemList list;
  list.add("reflection.commutator", [] {
    const vanhove::ReflectionCheck r = vanhove::reflection_commutator();
    std::vector<Certificate> out;
    out.push_back(exact_certificate("reflection.log_free", r.log_free ? "no log terms" : "log terms present",
                                    "no log terms", r.log_free, 0, {"commutator with the reflection logarithm"}));
    for (size_t k = 0; k < r.expected.size(); ++k) {
      const bool have = k < r.commutator.size();
      const bool equal = have && r.commutator[k].log_degree() <= 0 && r.commutator[k].coeff(0) == r.expected[k];
      out.push_back(exact_certificate("reflection.D" + std::to_string(k),
                                      have ? r.commutator[k].coeff(0).to_string() : "missing",
                                      r.expected[k].to_string(), equal, 0,
                                      {"coefficient of D^" + std::to_string(k) + " in the commutator"}));
    }
    return out;
  });
  return list;
}

}  // namespace bmlab::cli::detail
