#include <cmath>
#include <sstream>

#include "bmlab/exact/errors.hpp"
#include "bmlab/modular/modular.hpp"
#include "bmlab/mpnum/constants.hpp"
#include "bmlab/mpnum/moments.hpp"
#include "bmlab/mpnum/pslq.hpp"
#include "bmlab/sumrule/verify.hpp"
#include "bmlab/vanhove/vanhove.hpp"
#include "suite_items.hpp"

namespace bmlab::cli::detail {

using exact::BigInt;
using exact::BigRational;
using mpnum::BigFloat;
using mpnum::Precision;

namespace {

constexpr Tolerance kDecay{1e-25, true};
constexpr Tolerance kLoose{1e-20, true};
constexpr Tolerance kWeight{1e-18, true};

BigFloat num(long n, Precision p) { return BigFloat(n, p); }
BigFloat rat(long n, long d, Precision p) { return BigFloat(BigRational(n, d), p); }

Precision digits_to_bits(long digits) { return Precision(static_cast<long>(std::ceil(digits * 3.3219280948873623)) + 8); }

std::string relation_string(const std::vector<BigInt>& c) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << c[i].get_str();
  os << ")";
  return os.str();
}

}  // namespace

ItemList conjecture_items(const SuiteConfig& cfg) {
  ItemList list;
  const Precision p(cfg.precision_bits);
  for (int n = 1; n <= 6; ++n) {
    // the 3- and 4-loop rules carry the tighter decay-quadrature tolerance
    const Tolerance tol = (n == 3 || n == 4) ? kDecay : kLoose;
    for (int a = 0; 2 * a < n + 2; ++a)
      list.add1("sumrule.n" + std::to_string(n) + ".a" + std::to_string(a),
                [n, a, p, tol] { return sumrule::verify_sumrule(n, a, p, tol); });
  }
  list.add1("sumrule.n4.a0.printed", [p] {
    const BigFloat v = 2 * moment(0, 6, 1, p) - 85 * moment(0, 6, 3, p) + 72 * moment(0, 6, 5, p);
    return numeric_certificate("sumrule.n4.a0.printed", v, rat(15, 2, p), kDecay, p.bits, 0,
                               {"6-Bessel vacuum rule with weight 2 - 85 t^2 + 72 t^4"});
  });
  return list;
}

ItemList vanhove_ode_items(const SuiteConfig& cfg) {
  ItemList list;
  const Precision p(cfg.precision_bits);
  using vanhove::KernelSide;
  for (int n = 3; n <= 5; ++n) {
    std::vector<std::pair<KernelSide, int>> cases{{KernelSide::I, 1}, {KernelSide::K, 1}};
    for (int a = 2; 2 * a <= n + 2; ++a) cases.emplace_back(KernelSide::I, a);
    for (int a = 2; 2 * a <= n + 1; ++a) cases.emplace_back(KernelSide::K, a);
    for (const auto& [side, a] : cases) {
      const std::string tag = std::string(side == KernelSide::I ? "I" : "K") + std::to_string(a);
      list.add("vanhove.n" + std::to_string(n) + "." + tag, [n, side = side, a = a, p] {
        std::vector<Certificate> out;
        for (const auto& [un, ud] : {std::pair{1L, 2L}, {1L, 1L}, {2L, 1L}}) {
          try {
            out.push_back(vanhove::vanhove_residual(n, side, a, rat(un, ud, p), p, {1e-20, false}));
          } catch (const std::domain_error&) {
            // moment diverges at this u
          }
        }
        return out;
      });
    }
  }
  list.add("vanhove.structure", [] {
    std::vector<Certificate> out;
    for (int n = 1; n <= 5; ++n) {
      const vanhove::VanhoveOp op = vanhove::vanhove_operator(n);
      const std::string pre = "vanhove.n" + std::to_string(n);
      out.push_back(exact_certificate(pre + ".parity", "adjoint(L_" + std::to_string(n) + ")",
                                      (n % 2 ? "-L_" : "L_") + std::to_string(n), vanhove::parity_holds(op), 0,
                                      {"formal adjoint parity"}));
      out.push_back(exact_certificate(pre + ".factored", op.factored_string(), op.expanded.to_string(),
                                      vanhove::expand_factored(op.factored) == op.expanded, 0,
                                      {"factored form expands to the standard form"}));
    }
    for (int n = 3; n <= 4; ++n)
      for (auto f : {exact::PairFlavor::I, exact::PairFlavor::K}) {
        const std::string fl = f == exact::PairFlavor::I ? "I" : "K";
        out.push_back(exact_certificate("vanhove.n" + std::to_string(n) + ".intertwine." + fl,
                                        "t L_" + std::to_string(n) + "[" + fl + "0(v t)]",
                                        "adjoint annihilator on " + fl + "0(v t)/t",
                                        vanhove::intertwine_check(n, f), 0,
                                        {"off-shell operator intertwines with the on-shell adjoint"}));
      }
    return out;
  });
  return list;
}

ItemList exceptional_items(const SuiteConfig& cfg) {
  ItemList list;
  const Precision p(cfg.precision_bits);
  const std::vector<std::string> prov{"8-Bessel rule with weight 7 - 72 t^2"};
  list.add1("IKM44", [p, prov] {
    const BigFloat lhs = moment(4, 4, 1, p) - 72 * honorary_moment(p);
    return numeric_certificate("exceptional.IKM44", lhs, 7 * mpnum::log2_const(p) / 2, kDecay, p.bits, 0, prov);
  });
  list.add1("IKM35", [p, prov] {
    const BigFloat pi = mpnum::pi(p);
    const BigFloat lhs = moment(3, 5, 1, p) - 72 * moment(3, 5, 3, p);
    return numeric_certificate("exceptional.IKM35", lhs, -5 * pi * pi / 12, kDecay, p.bits, 0, prov);
  });
  list.add1("IKM26", [p, prov] {
    const BigFloat lhs = moment(2, 6, 1, p) - 72 * moment(2, 6, 3, p);
    return scaled_zero_certificate("exceptional.IKM26", lhs, moment(2, 6, 1, p), kDecay, p.bits, 0, prov);
  });
  list.add1("IKM17", [p, prov] {
    const BigFloat pi4 = pow(mpnum::pi(p), 4);
    const BigFloat lhs = moment(1, 7, 1, p) - 72 * moment(1, 7, 3, p);
    return numeric_certificate("exceptional.IKM17", lhs, 7 * pi4 / 48, kDecay, p.bits, 0, prov);
  });
  list.add1("quadratic", [p] {
    const BigFloat pi = mpnum::pi(p);
    const BigFloat lhs = 7 * pow(pi, 4) * moment(2, 6, 1, p) -
                         6912 * (moment(1, 7, 1, p) * moment(2, 6, 5, p) - moment(1, 7, 5, p) * moment(2, 6, 1, p));
    return numeric_certificate("exceptional.quadratic", lhs, 45 * pow(pi, 6) / 16, kLoose, p.bits, 0,
                               {"quadratic relation among IKM(1,7;.) and IKM(2,6;.)"});
  });
  return list;
}

ItemList lvalue_items(const SuiteConfig& cfg) {
  ItemList list;
  const Precision p(cfg.precision_bits);
  const std::vector<std::string> prov{"L-value of the weight-6 level-6 cusp form"};
  list.add("lvalue.moments", [p, prov] {
    const BigFloat pi = mpnum::pi(p), pi2 = pi * pi, pi4 = pi2 * pi2;
    const BigFloat L1 = modular::lvalue_f66(1, p), L2 = modular::lvalue_f66(2, p), L3 = modular::lvalue_f66(3, p);
    std::vector<Certificate> out;
    out.push_back(numeric_certificate("lvalue.IKM44_L3", moment(4, 4, 1, p), L3, kDecay, p.bits, 0, prov));
    out.push_back(numeric_certificate("lvalue.IKM35_L2", moment(3, 5, 1, p), pi2 / 4 * L2, kDecay, p.bits, 0, prov));
    out.push_back(numeric_certificate("lvalue.IKM26_L1", moment(2, 6, 1, p), pi4 / 8 * L1, kDecay, p.bits, 0, prov));
    out.push_back(numeric_certificate("lvalue.IKM17_L2", moment(1, 7, 1, p), pi4 / 4 * L2, kDecay, p.bits, 0, prov));
    out.push_back(numeric_certificate("lvalue.L1_L3", 7 * pi2 * L1, 36 * L3, kDecay, p.bits, 0, prov));
    out.push_back(numeric_certificate("lvalue.IKM26_IKM44", 14 * moment(2, 6, 1, p), 9 * pi2 * moment(4, 4, 1, p),
                                      kDecay, p.bits, 0, {"8-Bessel moment relation"}));
    out.push_back(numeric_certificate("lvalue.IKM17_IKM35", moment(1, 7, 1, p), pi2 * moment(3, 5, 1, p), kDecay,
                                      p.bits, 0, {"8-Bessel moment relation"}));
    return out;
  });
  list.add("lvalue.axis", [p, prov] {
    const modular::AxisIntegrals& ax = modular::axis_integrals(p);
    const BigFloat twopi = 2 * mpnum::pi(p);
    std::vector<Certificate> out;
    // L(s) = (2 pi)^s / Gamma(s) int f(iy) y^{s-1} dy from the axis pass
    const BigFloat L1 = twopi * ax.f_moment[0], L2 = twopi * twopi * ax.f_moment[1],
                   L3 = twopi * twopi * twopi * ax.f_moment[2] / 2;
    out.push_back(numeric_certificate("lvalue.L1.axis", L1, modular::lvalue_f66(1, p), kDecay, p.bits, 0, prov));
    out.push_back(numeric_certificate("lvalue.L2.axis", L2, modular::lvalue_f66(2, p), kDecay, p.bits, 0, prov));
    out.push_back(numeric_certificate("lvalue.L3.axis", L3, modular::lvalue_f66(3, p), kDecay, p.bits, 0, prov));
    // along z = iy: int f(z)(7 + 72 z^2) dz = i int f(iy)(7 - 72 y^2) dy
    const BigFloat v = 7 * ax.f_moment[0] - 72 * ax.f_moment[2];
    const BigFloat scale = 7 * abs(ax.f_moment[0]) + 72 * abs(ax.f_moment[2]);
    out.push_back(scaled_zero_certificate("lvalue.f66_7_72", v, scale, kLoose, p.bits, 0,
                                          {"vanishing f66 period with weight 7 + 72 z^2"}));
    return out;
  });
  list.add("weight", [p] {
    const modular::AxisIntegrals& ax = modular::axis_integrals(p);
    const BigFloat pi = mpnum::pi(p), pi2 = pi * pi;
    const std::vector<std::string> prov{"period of phi66 + chi66 along the imaginary axis"};
    auto cert = [&](const std::string& id, const BigFloat& lhs, const BigFloat& rhs, const BigFloat& dropped) {
      Certificate c = numeric_certificate(id, lhs, rhs, kWeight, p.bits, 0, prov);
      c.note = "discarded component of the period " + dropped.to_string(kResidualDigits);
      return c;
    };
    std::vector<Certificate> out;
    // z^0 dz and z^2 dz are imaginary along the axis, z dz is real
    const BigFloat w0 = -pow(pi, 5) / 3 * ax.weight[0].im();
    out.push_back(cert("weight.k0.IKM263", w0, moment(2, 6, 3, p), ax.weight[0].re()));
    out.push_back(cert("weight.k0.IKM261", w0, moment(2, 6, 1, p) / 72, ax.weight[0].re()));
    const BigFloat w1 = 4 * pow(pi, 4) / 3 * ax.weight[1].re();
    out.push_back(cert("weight.k1.IKM353", w1, moment(3, 5, 3, p) - pi2 / 192, ax.weight[1].im()));
    out.push_back(cert("weight.k1.IKM351", w1, moment(3, 5, 1, p) / 72 + pi2 / 1728, ax.weight[1].im()));
    const BigFloat w2 = 16 * pow(pi, 3) / 3 * ax.weight[2].im();
    out.push_back(cert("weight.k2.IKMh443", w2, honorary_moment(p) + 7 * mpnum::log2_const(p) / 144,
                       ax.weight[2].re()));
    out.push_back(cert("weight.k2.IKM441", w2, moment(4, 4, 1, p) / 72, ax.weight[2].re()));
    return out;
  });
  return list;
}

ItemList determinant_items(const SuiteConfig& cfg) {
  ItemList list;
  const Precision p(cfg.precision_bits);
  list.add1("det2", [p] {
    const BigFloat d = moment(1, 4, 1, p) * moment(2, 3, 3, p) - moment(1, 4, 3, p) * moment(2, 3, 1, p);
    const BigFloat rhs = 2 * pow(mpnum::pi(p), 3) / sqrt(num(27L * 3125L, p));
    return numeric_certificate("determinant.2x2", d, rhs, kDecay, p.bits, 0, {"5-Bessel moment determinant"});
  });
  list.add1("det3", [p] {
    BigFloat m[3][3] = {{BigFloat(p), BigFloat(p), BigFloat(p)},
                        {BigFloat(p), BigFloat(p), BigFloat(p)},
                        {BigFloat(p), BigFloat(p), BigFloat(p)}};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m[r][c] = moment(r + 1, 7 - r, 2 * c + 1, p);
    const BigFloat d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    const BigFloat rhs = 5 * pow(mpnum::pi(p), 8) / num(3L << 19, p);
    return numeric_certificate("determinant.3x3", d, rhs, kDecay, p.bits, 0, {"8-Bessel moment determinant"});
  });
  return list;
}

ItemList crandall_items(const SuiteConfig& cfg) {
  ItemList list;
  const Precision p(cfg.precision_bits);
  for (int m : {1, 3, 5}) {
    list.add1("crandall.m" + std::to_string(m), [m, p] {
      const BigFloat pi2 = mpnum::pi(p) * mpnum::pi(p);
      const BigFloat a = pi2 * moment(3, 5, m, p), b = moment(1, 7, m, p);
      const std::string id = "crandall.m" + std::to_string(m);
      const std::vector<std::string> prov{"pi^2 IKM(3,5;m) - IKM(1,7;m)"};
      if (m == 1) return scaled_zero_certificate(id, a - b, a, kDecay, p.bits, 0, prov);
      return numeric_certificate(id, a - b, pi2 * pi2 / (m == 3 ? 128 : 256), kDecay, p.bits, 0, prov);
    });
  }
  return list;
}

ItemList asymptotic_items(const SuiteConfig& cfg) {
  ItemList list;
  const Precision p(cfg.precision_bits);
  using vanhove::AsymptoteCase;
  const std::pair<AsymptoteCase, double> cases[] = {
      {AsymptoteCase::IvKM231_small, -1e-6}, {AsymptoteCase::IvKM321_small, -1e-6},
      {AsymptoteCase::IKvM231_small, 1e-6},  {AsymptoteCase::IvKM231_large, -1e6},
      {AsymptoteCase::IvKM321_large, -1e6},
  };
  for (const auto& [which, u] : cases)
    list.add1(vanhove::asymptote_name(which), [which = which, u = u, p] {
      return vanhove::asymptote_check(which, BigFloat(std::string(u < 0 ? "-" : "") + (std::abs(u) < 1 ? "1e-6" : "1e6"), p), p);
    });
  return list;
}

ItemList pslq_items(const SuiteConfig&) {
  ItemList list;
  const Precision search = digits_to_bits(100), verify = digits_to_bits(200);
  struct Family {
    std::string name;
    int a, b;
    std::vector<int> powers;
    std::string expected;
  };
  const std::vector<Family> families{{"IKM23", 2, 3, {1, 3, 5}, "(16, -228, 45)"}, {"IKM26", 2, 6, {1, 3}, "(1, -72)"}};
  for (const auto& f : families) {
    list.add("pslq." + f.name, [f, search, verify] {
      std::vector<BigFloat> v;
      for (int m : f.powers) v.push_back(moment(f.a, f.b, m, search));
      const mpnum::RelationSearch r = mpnum::find_integer_relation(v, search);
      std::vector<Certificate> out;
      const std::string found = r.relation ? relation_string(r.relation->coeffs) : "none";
      Certificate c = exact_certificate("pslq." + f.name + ".found", found, f.expected, found == f.expected, 0,
                                        {"integer relation search at 100 digits"});
      c.precision_bits = search.bits;
      out.push_back(c);
      if (!r.relation) return out;
      BigFloat sum(verify), scale(verify);
      for (size_t i = 0; i < v.size(); ++i) {
        const BigFloat term = BigFloat(BigRational(r.relation->coeffs[i]), verify) * moment(f.a, f.b, f.powers[i], verify);
        sum += term;
        scale += abs(term);
      }
      Certificate chk = scaled_zero_certificate("pslq." + f.name + ".verify", sum, scale, {1e-180, true}, verify.bits,
                                                0, {"found relation re-evaluated at 200 digits"});
      chk.note = "relation " + found + "; " + chk.note;
      out.push_back(chk);
      return out;
    });
  }
  list.add1("pslq.control", [search] {
    const std::vector<BigFloat> v{moment(2, 3, 1, search), mpnum::pi(search), mpnum::log2_const(search)};
    const mpnum::RelationSearch r = mpnum::find_integer_relation(v, search);
    Certificate c = exact_certificate("pslq.control", r.relation ? relation_string(r.relation->coeffs) : "none",
                                      "none", !r.relation, 0, {"no small relation among IKM(2,3;1), pi, log 2"});
    c.precision_bits = search.bits;
    c.note = "norm bound " + r.norm_bound.to_string(kResidualDigits);
    return c;
  });
  return list;
}

}  // namespace bmlab::cli::detail
