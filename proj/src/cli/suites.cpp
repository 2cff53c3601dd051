#include "bmlab/cli/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <mutex>
#include <tuple>

#include "bmlab/mpnum/moments.hpp"
#include "bmlab/mpnum/quadrature.hpp"
#include "suite_items.hpp"

namespace bmlab::cli {

namespace {

using detail::ItemList;

struct SuiteEntry {
  SuiteInfo info;
  ItemList (*items)(const SuiteConfig&);
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> r = {
      {{"table1", "sum-rule polynomials f_1..f_10 against the stored golden table (exact)"}, detail::table1_items},
      {{"bmw-annihilation", "annihilator of m-fold Bessel products kills every y1^a y2^(m-a), m <= 7 (exact)"},
       detail::bmw_items},
      {{"recurrences", "moment recurrences for 5 and 6 factors: tabulated family match and numeric residuals"},
       detail::recurrence_items},
      {{"conjecture-bbbg", "vacuum and non-vacuum sum rules f_n for n <= 6, incl. the 24 and 15/2 forms"},
       detail::conjecture_items},
      {{"vanhove-ode", "off-shell operators: constants at u = 1/2, 1, 2; parity, factored form, intertwining"},
       detail::vanhove_ode_items},
      {{"reflection", "commutator of the 3rd-order operator with the reflection logarithm (exact)"},
       detail::reflection_items},
      {{"exceptional-8bessel", "8-Bessel linear sum rules with weight 7 - 72 t^2 and the quadratic rule"},
       detail::exceptional_items},
      {{"lvalues", "8-Bessel moments as L-values of the weight-6 level-6 cusp form; modular weight integrals"},
       detail::lvalue_items},
      {{"determinants", "2x2 and 3x3 moment determinants in closed form"}, detail::determinant_items},
      {{"crandall", "pi^2 IKM(3,5;m) - IKM(1,7;m) for m = 1, 3, 5"}, detail::crandall_items},
      {{"modular-param", "off-shell moments at u = -64 X(z) against Z(z) on the ray, the arcs and the axis"},
       detail::modular_param_items},
      {{"basechange", "z-alpha3 relation, base change of phi/chi, Legendre P_{-1/3} moment"},
       detail::basechange_items},
      {{"kluyver", "7-step planar walk density: value, slope and second-derivative limit at x = 1"},
       detail::kluyver_items},
      {{"asymptotics", "leading behaviour of off-shell moments at |u| = 1e-6 and 1e6"}, detail::asymptotic_items},
      {{"pslq-discovery", "integer relations among IKM(2,3;1,3,5) and IKM(2,6;1,3) found and re-verified"},
       detail::pslq_items},
  };
  return r;
}

const SuiteEntry& find_entry(const std::string& name) {
  for (const auto& e : registry())
    if (e.info.name == name) return e;
  throw UsageError("unknown suite '" + name + "' (use --list)");
}

}  // namespace

const std::vector<SuiteInfo>& suite_list() {
  static const std::vector<SuiteInfo> list = [] {
    std::vector<SuiteInfo> v;
    for (const auto& e : registry()) v.push_back(e.info);
    return v;
  }();
  return list;
}

bool is_suite(const std::string& name) {
  return std::any_of(registry().begin(), registry().end(), [&](const SuiteEntry& e) { return e.info.name == name; });
}

void apply_tolerance(Certificate& c, double tol) {
  if (c.tolerance.empty() || c.tolerance == "0" || c.residual == "nan") return;
  // residuals may sit far below double range
  const mpnum::Precision p(64);
  const mpnum::BigFloat r(c.residual, p);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.0e", tol);
  c.tolerance = buf;
  c.status = r.is_finite() && abs(r) < mpnum::BigFloat(tol, p) ? "pass" : "fail";
}

std::vector<Certificate> run_suite(const std::string& name, const SuiteConfig& cfg) {
  const SuiteEntry& entry = find_entry(name);
  ItemList list;
  try {
    list = entry.items(cfg);
  } catch (const std::exception& e) {
    return {error_certificate(name + ".setup", e.what(), cfg.precision_bits, cfg.trunc_order)};
  }
  std::vector<std::vector<Certificate>> out(list.items.size());
  mpnum::for_each_index(list.items.size(), mpnum::ExecPolicy::Parallel, [&](size_t i) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      out[i] = list.items[i]();
    } catch (const std::exception& e) {
      out[i] = {error_certificate(name + "." + list.names[i], e.what(), cfg.precision_bits, cfg.trunc_order)};
    }
    const long ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
    for (auto& c : out[i]) c.wall_ms = ms;
  });
  std::vector<Certificate> certs;
  for (auto& v : out)
    for (auto& c : v) certs.push_back(std::move(c));
  if (const auto tol = cfg.tolerance_override(name))
    for (auto& c : certs) apply_tolerance(c, *tol);
  std::stable_sort(certs.begin(), certs.end(),
                   [](const Certificate& a, const Certificate& b) { return a.identity_id < b.identity_id; });
  return certs;
}

std::vector<Certificate> run_all(const SuiteConfig& cfg) {
  std::vector<Certificate> all;
  for (const auto& s : suite_list()) {
    auto part = run_suite(s.name, cfg);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return all;
}

bool all_passed(const std::vector<Certificate>& certs) {
  return std::all_of(certs.begin(), certs.end(), [](const Certificate& c) { return c.passed(); });
}

namespace detail {

mpnum::BigFloat moment(int a, int b, int m, mpnum::Precision p) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, long>, mpnum::BigFloat> cache;
  const auto key = std::make_tuple(a, b, m, p.bits);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  mpnum::BigFloat v = mpnum::ikm(a, b, m, p);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(v)).first->second;
}

mpnum::BigFloat honorary_moment(mpnum::Precision p) {
  static std::mutex mu;
  static std::map<long, mpnum::BigFloat> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(p.bits); it != cache.end()) return it->second;
  }
  mpnum::BigFloat v = mpnum::ikmh443(p);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(p.bits, std::move(v)).first->second;
}

}  // namespace detail

}  // namespace bmlab::cli
