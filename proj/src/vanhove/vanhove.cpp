#include "bmlab/vanhove/vanhove.hpp"

#include <stdexcept>

#include "bmlab/exact/errors.hpp"
#include "bmlab/exact/json_io.hpp"
#include "bmlab/mpnum/constants.hpp"
#include "bmlab/mpnum/moments.hpp"

namespace bmlab::vanhove {

using exact::BesselPairExpr;
using exact::LaurentPoly;
using mpnum::BigFloat;
using mpnum::Precision;

namespace {

Poly upoly(std::initializer_list<long> c) { return Poly("u", c); }

Poly prod(std::initializer_list<Poly> fs) {
  Poly r = Poly::constant("u", 1);
  for (const auto& f : fs) r *= f;
  return r;
}

const Poly kU = upoly({0, 1});

Poly lin(long root) { return upoly({-root, 1}); }  // u - root

DiffOp d_power(int k) {
  DiffOp r = DiffOp::identity("u");
  for (int i = 0; i < k; ++i) r = r.compose(DiffOp::derivation("u"));
  return r;
}

std::vector<FactoredBlock> table_rows(int n) {
  switch (n) {
    case 1: return {{0, prod({kU, lin(4)}), true, 0}};
    case 2: return {{1, prod({kU, lin(1), lin(9)}), false, 1}, {0, lin(3), false, 0}};
    case 3:
      return {{1, prod({kU, kU, lin(4), lin(16)}), true, 1}, {0, prod({kU, lin(8)}), true, 0}};
    case 4:
      return {{2, prod({kU, kU, lin(1), lin(9), lin(25)}), false, 2},
              {1, prod({kU, upoly({285, -98, 5})}), false, 1},
              {0, lin(5), false, 0}};
    case 5:
      return {{2, prod({kU, kU, kU, lin(4), lin(16), lin(36)}), true, 2},
              {1, prod({kU, kU, upoly({1020, -168, 5})}), true, 1},
              {0, prod({kU, lin(12)}), true, 0}};
    default: throw UnsupportedError("vanhove_operator: catalog covers n = 1..5");
  }
}

// Standard forms printed for n = 2, 3, 4 (n = 3 with D^1 coefficient 7u^2 - 68u + 64).
std::optional<DiffOp> standard_form(int n) {
  switch (n) {
    case 2: return DiffOp("u", {lin(3), upoly({9, -20, 3}), prod({kU, lin(1), lin(9)})});
    case 3:
      return DiffOp("u", {lin(4), upoly({64, -68, 7}), prod({upoly({0, 6}), upoly({32, -15, 1})}),
                          prod({kU, kU, lin(4), lin(16)})});
    case 4:
      return DiffOp("u", {lin(5), prod({upoly({-5, 3}), upoly({-57, 5})}), upoly({-450, 1839, -518, 25}),
                          prod({upoly({0, 2}), upoly({-450, 777, -140, 5})}), prod({kU, kU, lin(25), lin(9), lin(1)})});
    default: return std::nullopt;
  }
}

}  // namespace

std::string FactoredBlock::to_string() const {
  auto dpow = [](int k) { return k == 0 ? std::string() : "D^" + std::to_string(k) + " "; };
  const std::string ps = "(" + p.to_string() + ")";
  if (root_pair) return dpow(outer) + "sqrt" + ps + " D sqrt" + ps + (inner ? " " + dpow(inner) : std::string());
  return dpow(outer) + ps + (inner ? " " + dpow(inner) : std::string());
}

std::string VanhoveOp::factored_string() const {
  std::string s;
  for (const auto& b : factored) s += (s.empty() ? "" : " + ") + b.to_string();
  return s;
}

DiffOp expand_factored(const std::vector<FactoredBlock>& blocks) {
  DiffOp total("u");
  for (const auto& b : blocks) {
    DiffOp mid = b.root_pair ? DiffOp("u", {LaurentPoly(b.p.derivative() * BigRational(1, 2)), LaurentPoly(b.p)})
                             : DiffOp::multiplication(LaurentPoly(b.p));
    total += d_power(b.outer).compose(mid).compose(d_power(b.inner));
  }
  return total;
}

bool parity_holds(const VanhoveOp& op) {
  const BigRational sign = op.n % 2 == 0 ? 1 : -1;
  return exact::formal_adjoint(op.expanded) == op.expanded * sign;
}

VanhoveOp vanhove_operator(int n) {
  VanhoveOp op;
  op.n = n;
  op.factored = table_rows(n);
  op.expanded = expand_factored(op.factored);
  if (op.expanded.order() != n) throw InternalConsistencyError("vanhove_operator: wrong order");
  if (auto std_form = standard_form(n); std_form && !(*std_form == op.expanded))
    throw InternalConsistencyError("vanhove_operator: factored and standard forms differ for n = " + std::to_string(n));
  if (!parity_holds(op)) throw InternalConsistencyError("vanhove_operator: parity fails for n = " + std::to_string(n));
  return op;
}

// ---------------------------------------------------------------- reflection

RatFunc reflection_log_derivative() {
  // (3/u - 4/(u-4) + 1/(u-16)) / 192
  RatFunc r = RatFunc(Poly::constant("u", 3), kU) - RatFunc(Poly::constant("u", 4), lin(4)) +
              RatFunc(Poly::constant("u", 1), lin(16));
  return r * BigRational(1, 192);
}

ReflectionCheck reflection_commutator() {
  const RatFunc dl = reflection_log_derivative();
  const DiffOp L = vanhove_operator(3).expanded;
  std::vector<LogElem> lc;
  for (const auto& c : L.coefficients()) lc.emplace_back(RatFunc(c.to_poly()), dl);
  const LogElem ell = LogElem::ell(dl);
  const LogElem zero(RatFunc::constant("u", 0), dl);
  auto deriv = [](const LogElem& e) { return e.derivative(); };
  std::vector<LogElem> left = exact::compose_coeffs(lc, std::vector<LogElem>{ell}, zero, deriv);
  ReflectionCheck out;
  for (size_t k = 0; k < left.size(); ++k) {
    LogElem c = left[k];
    if (k < lc.size()) c -= ell * lc[k];
    out.commutator.push_back(c);
  }
  while (!out.commutator.empty() && out.commutator.back().is_zero()) out.commutator.pop_back();

  auto frac = [](long num, long den, long root, int power) {
    Poly d = Poly::constant("u", den);
    for (int i = 0; i < power; ++i) d *= lin(root);
    return RatFunc(Poly::constant("u", num), d);
  };
  out.expected = {frac(2, 1, 4, 2) + frac(1, 3, 4, 1) + frac(8, 1, 16, 2) + frac(2, 3, 16, 1),
                  RatFunc::constant("u", 3), RatFunc(upoly({0, 3}))};
  out.log_free = true;
  for (const auto& c : out.commutator) out.log_free = out.log_free && c.log_degree() <= 0;
  out.matches = out.log_free && out.commutator.size() == out.expected.size();
  for (size_t k = 0; out.matches && k < out.expected.size(); ++k)
    out.matches = out.commutator[k].coeff(0) == out.expected[k];
  return out;
}

// ---------------------------------------------------------------- kernel calculus

void BiLaurent::add(int i, int j, const BigRational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.try_emplace({i, j}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

KernelExpr KernelExpr::kernel(PairFlavor f) {
  KernelExpr e;
  e.flavor = f;
  e.c0.add(0, 0, 1);
  return e;
}

// B0' = sigma B1 and B1' = sigma B0 - B1/x at x = v t.
KernelExpr KernelExpr::d_dv() const {
  const BigRational s = flavor == PairFlavor::I ? 1 : -1;
  KernelExpr r;
  r.flavor = flavor;
  for (const auto& [e, c] : c0.terms) {
    r.c0.add(e.first - 1, e.second, c * e.first);
    r.c1.add(e.first, e.second + 1, c * s);
  }
  for (const auto& [e, c] : c1.terms) {
    r.c1.add(e.first - 1, e.second, c * e.first);
    r.c0.add(e.first, e.second + 1, c * s);
    r.c1.add(e.first - 1, e.second, -c);
  }
  return r;
}

KernelExpr KernelExpr::d_dt() const {
  const BigRational s = flavor == PairFlavor::I ? 1 : -1;
  KernelExpr r;
  r.flavor = flavor;
  for (const auto& [e, c] : c0.terms) {
    r.c0.add(e.first, e.second - 1, c * e.second);
    r.c1.add(e.first + 1, e.second, c * s);
  }
  for (const auto& [e, c] : c1.terms) {
    r.c1.add(e.first, e.second - 1, c * e.second);
    r.c0.add(e.first + 1, e.second, c * s);
    r.c1.add(e.first, e.second - 1, -c);
  }
  return r;
}

KernelExpr KernelExpr::d_du() const { return d_dv().times(-1, 0, BigRational(1, 2)); }

KernelExpr KernelExpr::times(int vpow, int tpow, const BigRational& c) const {
  KernelExpr r;
  r.flavor = flavor;
  for (const auto& [e, x] : c0.terms) r.c0.add(e.first + vpow, e.second + tpow, x * c);
  for (const auto& [e, x] : c1.terms) r.c1.add(e.first + vpow, e.second + tpow, x * c);
  return r;
}

KernelExpr& KernelExpr::operator+=(const KernelExpr& o) {
  if (flavor != o.flavor && !(o.c0.is_zero() && o.c1.is_zero())) {
    if (!(c0.is_zero() && c1.is_zero())) throw std::invalid_argument("KernelExpr: mixed pairs");
    flavor = o.flavor;
  }
  for (const auto& [e, c] : o.c0.terms) c0.add(e.first, e.second, c);
  for (const auto& [e, c] : o.c1.terms) c1.add(e.first, e.second, c);
  return *this;
}

KernelExpr apply_u_operator(const DiffOp& op, PairFlavor f) {
  KernelExpr out;
  out.flavor = f;
  KernelExpr dk = KernelExpr::kernel(f);
  for (int k = 0; k <= op.order(); ++k) {
    for (const auto& [e, c] : op.coeff(k).terms()) out += dk.times(2 * e, 0, c);
    dk = dk.d_du();
  }
  return out;
}

KernelExpr apply_t_operator(const DiffOp& op, const KernelExpr& e) {
  KernelExpr out;
  out.flavor = e.flavor;
  KernelExpr dk = e;
  for (int k = 0; k <= op.order(); ++k) {
    for (const auto& [x, c] : op.coeff(k).terms()) out += dk.times(0, x, c);
    dk = dk.d_dt();
  }
  return out;
}

bool intertwine_check(int n, PairFlavor f) {
  const DiffOp L = vanhove_operator(n).expanded;
  const KernelExpr lhs = apply_u_operator(L, f).times(0, 1, 1);
  const DiffOp adj = exact::formal_adjoint(exact::bmw_operator(n + 1));
  BigRational scale(n % 2 == 0 ? 1 : -1, 1);
  scale /= BigRational(exact::BigInt(1) << static_cast<unsigned>(n));
  const KernelExpr rhs = apply_t_operator(adj, KernelExpr::kernel(f).times(0, -1, 1)).times(0, 0, scale);
  return lhs == rhs;
}

bool intertwine_check(int n) { return intertwine_check(n, PairFlavor::I) && intertwine_check(n, PairFlavor::K); }

// ---------------------------------------------------------------- numeric checks

BigRational vanhove_constant(int n, KernelSide side, int a) {
  const BigRational pow2(exact::BigInt(1) << static_cast<unsigned>(n));
  if (a == 1) {
    if (side == KernelSide::I) return -BigRational(exact::factorial(static_cast<unsigned>(n + 1))) / pow2;
    return BigRational(exact::factorial(static_cast<unsigned>(n))) / pow2;
  }
  const bool in_range = side == KernelSide::I ? (a >= 2 && 2 * a <= n + 2) : (a >= 2 && 2 * a <= n + 1);
  if (in_range) return 0;
  throw UnsupportedError("vanhove_constant: no constant for this moment");
}

BigFloat ivkm(int a, int b, int m, const BigFloat& u, Precision p) {
  if (a < 1) throw std::domain_error("ivkm: a >= 1 (the kernel counts as one I0 factor)");
  if (u.sign() >= 0)
    return mpnum::offshell_moment({mpnum::KernelKind::I0, a - 1, b, m, u, false}, p).value;
  return mpnum::offshell_moment({mpnum::KernelKind::J0, a - 1, b, m, sqrt(-u), false}, p).value;
}

BigFloat ikvm(int a, int b, int m, const BigFloat& u, Precision p) {
  if (b < 1) throw std::domain_error("ikvm: b >= 1 (the kernel counts as one K0 factor)");
  if (u.sign() <= 0) throw std::domain_error("ikvm: u > 0 required");
  return mpnum::offshell_moment({mpnum::KernelKind::K0, a, b - 1, m, u, false}, p).value;
}

cli::Certificate vanhove_residual(int n, KernelSide side, int a, const BigFloat& u, Precision p, cli::Tolerance tol) {
  if (n < 3 || n > 5) throw UnsupportedError("vanhove_residual: n = 3..5");
  const BigRational target = vanhove_constant(n, side, a);
  if (!(u > 0L)) throw std::domain_error("vanhove_residual: u > 0 required");
  const int b = n + 2 - a;
  const int pa = side == KernelSide::I ? a - 1 : a;
  const int pb = side == KernelSide::I ? b : b - 1;
  const auto k0 = side == KernelSide::I ? mpnum::KernelKind::I0 : mpnum::KernelKind::K0;
  const auto k1 = side == KernelSide::I ? mpnum::KernelKind::I1 : mpnum::KernelKind::K1;
  if (!mpnum::converges({k0, pa, pb, 1, u, false}) || mpnum::decay_rate({k0, pa, pb, 1, u, false}) <= 0)
    throw std::domain_error("vanhove_residual: u outside the convergence interval");

  const Precision w = p + 32;
  const BigFloat v = sqrt(u.at(w));
  const KernelExpr e = apply_u_operator(vanhove_operator(n).expanded,
                                        side == KernelSide::I ? PairFlavor::I : PairFlavor::K);
  // collect sum_i c_ij v^i per (pair member, t power)
  std::map<std::pair<int, int>, BigFloat> coeff;
  auto collect = [&](const BiLaurent& bl, int which) {
    for (const auto& [ex, c] : bl.terms) {
      auto [it, fresh] = coeff.try_emplace({which, ex.second}, BigFloat(0L, w));
      it->second += BigFloat(c, w) * pow(v, static_cast<long>(ex.first));
    }
  };
  collect(e.c0, 0);
  collect(e.c1, 1);
  std::vector<mpnum::KernelTerm> terms;
  std::vector<BigFloat> weights;
  for (const auto& [key, c] : coeff) {
    if (key.second < 0) throw InternalConsistencyError("vanhove_residual: negative t power");
    terms.push_back({key.first == 0 ? k0 : k1, pa, pb, key.second + 1});
    weights.push_back(c);
  }
  const auto m = mpnum::kernel_moments(terms, v.at(p), p);
  BigFloat sum(w), scale(w);
  for (size_t i = 0; i < m.size(); ++i) {
    sum += weights[i] * m[i].value;
    scale += abs(weights[i] * m[i].value);
  }
  const std::string id = std::string("vanhove.n") + std::to_string(n) + (side == KernelSide::I ? ".IvKM(" : ".IKvM(") +
                         std::to_string(a) + "," + std::to_string(b) + ";1).u=" + u.to_string(4);
  auto cert = cli::numeric_certificate(id, sum.at(p), BigFloat(target, p), tol, p.bits, 0,
                                       {"order-" + std::to_string(n) + " off-shell operator constant"});
  cert.note = "terms " + std::to_string(terms.size()) + ", sum of |terms| " + scale.to_string(cli::kResidualDigits);
  return cert;
}

std::string asymptote_name(AsymptoteCase c) {
  switch (c) {
    case AsymptoteCase::IvKM231_small: return "IvKM(2,3;1|u->0-)";
    case AsymptoteCase::IvKM231_large: return "IvKM(2,3;1|u->-inf)";
    case AsymptoteCase::IvKM321_small: return "IvKM(3,2;1|u->0-)";
    case AsymptoteCase::IvKM321_large: return "IvKM(3,2;1|u->-inf)";
    case AsymptoteCase::IKvM231_small: return "IKvM(2,3;1|u->0+)";
  }
  return "?";
}

cli::Certificate asymptote_check(AsymptoteCase which, const BigFloat& u, Precision p) {
  const bool large = which == AsymptoteCase::IvKM231_large || which == AsymptoteCase::IvKM321_large;
  // ratio targets need few digits; the oscillatory integrals at |u| = 1e6 run at 64 bits
  const Precision q = large ? Precision(std::min(p.bits, 64L)) : p;
  const BigFloat uu = u.at(q);
  const BigFloat pi2 = mpnum::pi(q) * mpnum::pi(q);
  const std::string id = "asymptote." + asymptote_name(which) + ".u=" + uu.to_string(3);
  const std::vector<std::string> prov{"leading-order off-shell asymptotics"};
  const cli::Tolerance tol{0.1, false};

  if (large) {
    if (!(uu < 0L)) throw std::domain_error("asymptote_check: u < 0 required");
    mpnum::OscillatoryOptions osc;
    osc.tol_bits = 30;
    const int a = which == AsymptoteCase::IvKM231_large ? 1 : 2;
    const int b = which == AsymptoteCase::IvKM231_large ? 3 : 2;
    const BigFloat value = mpnum::offshell_moment({mpnum::KernelKind::J0, a, b, 1, sqrt(-uu), false}, q, {}, osc).value;
    const BigFloat lg = log(BigFloat(-1L, q) / uu);
    const BigFloat model = which == AsymptoteCase::IvKM231_large ? -(lg * lg * 3L) / (uu * 4L) : lg / uu;
    auto c = cli::numeric_certificate(id, value / model, BigFloat(1L, q), tol, q.bits, 0, prov);
    c.note = "lhs = value / leading model; value " + value.to_string(12);
    return c;
  }

  BigFloat value(q), lead(q), corrected(q);
  switch (which) {
    case AsymptoteCase::IvKM231_small:
      if (!(uu < 0L)) throw std::domain_error("asymptote_check: u < 0 required");
      value = ivkm(2, 3, 1, uu, q);
      lead = pi2 / 16L;
      corrected = lead * (BigFloat(1L, q) + uu / 16L);
      break;
    case AsymptoteCase::IvKM321_small: {
      if (!(uu < 0L)) throw std::domain_error("asymptote_check: u < 0 required");
      value = ivkm(3, 2, 1, uu, q);
      lead = -log(-uu / 64L) / 8L;
      corrected = lead * (BigFloat(1L, q) + uu / 16L);
      break;
    }
    case AsymptoteCase::IKvM231_small: {
      if (!(uu > 0L)) throw std::domain_error("asymptote_check: u > 0 required");
      value = ikvm(2, 3, 1, uu, q);
      const BigFloat l4 = log(BigFloat(4L, q) / uu);
      const BigFloat l64 = log(BigFloat(64L, q) / uu);
      lead = l4 * l4 / 32L;
      corrected = l64 * l64 / 32L + pi2 / 96L;
      break;
    }
    default: break;
  }
  const BigFloat q_ratio = abs(value - corrected) / abs(value - lead);
  auto c = cli::numeric_certificate(id, value, corrected, tol, q.bits, 0, prov);
  c.residual = q_ratio.to_string(cli::kResidualDigits);
  c.relative = true;
  c.status = q_ratio < BigFloat(tol.value, q) ? "pass" : "fail";
  c.note = "residual = |value - next-order model| / |value - leading model|; leading model " + lead.to_string(12) +
           ", ratio to leading " + (value / lead).to_string(8);
  return c;
}

nlohmann::json catalog_json() {
  nlohmann::json out = nlohmann::json::array();
  for (int n = 1; n <= 5; ++n) {
    const VanhoveOp op = vanhove_operator(n);
    out.push_back({{"n", n}, {"factored", op.factored_string()}, {"operator", exact::to_json(op.expanded)}});
  }
  return out;
}

}  // namespace bmlab::vanhove
