#include "bmlab/modular/modular.hpp"
#include "bmlab/modular/qseries.hpp"
#include "bmlab/mpnum/constants.hpp"
#include "bmlab/mpnum/kluyver.hpp"
#include "bmlab/mpnum/moments.hpp"
#include "bmlab/vanhove/vanhove.hpp"
#include "suite_items.hpp"

namespace bmlab::cli::detail {

using modular::HalfPlanePoint;
using modular::ModularObject;
using mpnum::BigComplex;
using mpnum::BigFloat;
using mpnum::KernelKind;
using mpnum::Precision;

namespace {

constexpr Tolerance kRay{1e-20, true};
constexpr Tolerance kArc{1e-15, true};
constexpr Tolerance kOsc{1e-10, true};

mpnum::OscillatoryOptions osc_options(const SuiteConfig& cfg) {
  mpnum::OscillatoryOptions o;
  o.max_panels = cfg.osc_max_zeros;
  o.levin_terms = cfg.tail_terms;
  return o;
}

struct ModularPoint {
  BigComplex z;
  BigFloat u;         // Re(-64 X(z))
  BigFloat u_dropped; // Im(-64 X(z))
  BigComplex Z;
};

ModularPoint modular_point(const BigComplex& z, Precision p) {
  const HalfPlanePoint hp(z);
  const BigComplex u = modular::eval_modular(ModularObject::X63, hp, p) * -64L;
  return {z, u.re(), u.im(), modular::eval_modular(ModularObject::Z63, hp, p)};
}

Certificate with_note(Certificate c, const std::string& note) {
  c.note = note;
  return c;
}

}  // namespace

ItemList modular_param_items(const SuiteConfig& cfg) {
  ItemList list;
  const Precision p(cfg.precision_bits);
  const int trunc = cfg.trunc_order;
  const auto osc = osc_options(cfg);

  list.add1("modular.f66.two_formulas", [trunc] {
    const modular::ModularObjects& m = modular::modular_objects(trunc);
    const modular::QSeries via = m.Z63.pow(2) * m.X63.q_derivative();
    return exact_certificate("modular.f66.two_formulas", "Z63^2 q dX63/dq", "eta-quotient sum f66",
                             agree(via, m.f66), trunc, {"coefficientwise q-expansion identity"});
  });

  list.add("modular.laws", [p] {
    std::vector<Certificate> out;
    const Tolerance tol{1e-30, true};
    {
      const BigComplex z = BigComplex(BigFloat(p), BigFloat(1L, p) / 3);
      const BigComplex a = modular::eval_modular(ModularObject::X63, HalfPlanePoint(modular::apply_w6(z)), p);
      const BigComplex b = modular::eval_modular(ModularObject::X63, HalfPlanePoint(z), p);
      out.push_back(numeric_certificate("modular.law.X_W6", (a * b * 64L).re(), BigFloat(1L, p), tol, p.bits, 0,
                                        {"X63(W6 z) * 64 X63(z) = 1 at z = i/3"}));
    }
    {
      const BigComplex z = BigComplex(BigFloat(p), BigFloat(1L, p) / 2);
      const HalfPlanePoint hp(z);
      const BigComplex lhs = modular::eval_modular(ModularObject::Z63, HalfPlanePoint(modular::apply_w6(z)), p);
      const BigComplex rhs = z * z * modular::eval_modular(ModularObject::Z63, hp, p) *
                             modular::eval_modular(ModularObject::X63, hp, p) * -48L;
      out.push_back(numeric_certificate("modular.law.Z_W6", lhs.re(), rhs.re(), tol, p.bits, 0,
                                        {"Z63(W6 z) = -48 z^2 Z63(z) X63(z) at z = i/2"}));
    }
    {
      const BigComplex z(BigFloat(1L, p) / 2, BigFloat(1L, p) / 2);
      const BigComplex a = modular::eval_modular(ModularObject::X63, HalfPlanePoint(modular::apply_w3(z)), p);
      const BigComplex b = modular::eval_modular(ModularObject::X63, HalfPlanePoint(z), p);
      out.push_back(numeric_certificate("modular.law.X_W3", a.re(), b.re(), tol, p.bits, 0,
                                        {"X63(W3 z) = X63(z) at z = 1/2 + i/2"}));
    }
    {
      // reduction boundary: Im 6z just above 1/4 takes one extra inversion
      const BigComplex z(BigFloat(p), BigFloat(26L, p) / 600);
      const BigComplex a = modular::eval_modular(ModularObject::X63, HalfPlanePoint(z), p);
      const BigComplex b = modular::eval_modular(ModularObject::X63, HalfPlanePoint(z), p, {true});
      out.push_back(numeric_certificate("modular.eval.extra_inversion", a.re(), b.re(), tol, p.bits, 0,
                                        {"X63 with and without one extra inversion"}));
    }
    return out;
  });

  list.add("modular.ray", [p] {
    const BigFloat pi = mpnum::pi(p), pi2 = pi * pi;
    const ModularPoint mp = modular_point(BigComplex(BigFloat(1L, p) / 2, BigFloat(1L, p)), p);
    const std::string note = "z = 1/2 + i, u = " + mp.u.to_string(kValueDigits);
    const std::vector<std::string> prov{"modular parametrization on Re z = 1/2"};
    const BigFloat Z = mp.Z.re();
    std::vector<Certificate> out;
    out.push_back(with_note(numeric_certificate("modular.ray.IvKM231", vanhove::ivkm(2, 3, 1, mp.u, p), pi2 / 16 * Z,
                                                kRay, p.bits, 0, prov),
                            note));
    // (pi^2/96)[1 - 3(2z-1)^2] with 2z - 1 = 2i
    out.push_back(with_note(numeric_certificate("modular.ray.IKvM231", vanhove::ikvm(2, 3, 1, mp.u, p),
                                                13 * pi2 / 96 * Z, kRay, p.bits, 0, prov),
                            note));
    // (pi^3/(8i))(2z-1) Z = (pi^3/4) Z
    const BigFloat sum = vanhove::ivkm(1, 4, 1, mp.u, p) + 4 * vanhove::ikvm(1, 4, 1, mp.u, p);
    out.push_back(with_note(
        numeric_certificate("modular.ray.IvKM141_IKvM141", sum, pi2 * pi / 4 * Z, kRay, p.bits, 0, prov), note));
    return out;
  });

  for (int arc = 0; arc < 2; ++arc) {
    list.add1("modular.arc" + std::to_string(arc), [arc, p] {
      const BigFloat pi = mpnum::pi(p);
      BigComplex z(p);
      std::string where;
      if (arc == 0) {
        // 1/2 + (i/(2 sqrt 3)) e^{i pi/6}, u in (4, 16)
        z = BigComplex(BigFloat(1L, p) / 2, BigFloat(p)) +
            BigComplex(BigFloat(p), BigFloat(1L, p) / (2 * sqrt(BigFloat(3L, p)))) * mpnum::expi(pi / 6);
        where = "z = 1/2 + (i/(2 sqrt 3)) e^{i pi/6}";
      } else {
        // (1 + e^{2 pi i/3})/6, u > 16
        z = (BigComplex(BigFloat(1L, p)) + mpnum::expi(2 * pi / 3)) / BigFloat(6L, p);
        where = "z = (1 + e^{2 pi i/3})/6";
      }
      const ModularPoint mp = modular_point(z, p);
      BigComplex w = z * 2L - BigComplex(BigFloat(1L, p));
      const BigComplex rhs = (BigComplex(BigFloat(1L, p)) - w * w * 3L) * mp.Z * (pi * pi / 96);
      Certificate c = numeric_certificate("modular.arc" + std::to_string(arc) + ".IKvM231",
                                          vanhove::ikvm(2, 3, 1, mp.u, p), rhs.re(), kArc, p.bits, 0,
                                          {"modular parametrization on an arc beyond u = 4"});
      c.note = where + ", u = " + mp.u.to_string(12) + ", discarded Im u " + mp.u_dropped.to_string(kResidualDigits) +
               ", Im rhs " + rhs.im().to_string(kResidualDigits);
      return c;
    });
  }

  list.add("modular.axis", [p, osc] {
    const BigFloat pi = mpnum::pi(p);
    const ModularPoint mp = modular_point(BigComplex(BigFloat(p), BigFloat(1L, p)), p);
    const BigFloat x = sqrt(-mp.u), Z = mp.Z.re();
    const std::string note = "z = i, x = " + x.to_string(kValueDigits);
    const std::vector<std::string> prov{"analytic continuation to J0/Y0 kernels at z = i"};
    auto om = [&](KernelKind k, int a, int b) { return mpnum::offshell_moment({k, a, b, 1, x, false}, p, {}, osc).value; };
    std::vector<Certificate> out;
    out.push_back(with_note(
        numeric_certificate("modular.axis.JIKKK", om(KernelKind::J0, 1, 3), pi * pi / 16 * Z, kOsc, p.bits, 0, prov),
        note));
    // pi z/(4i) Z = (pi/4) Z and pi(z^2 + 1/6)/4 Z = -(5 pi/24) Z at z = i
    out.push_back(with_note(
        numeric_certificate("modular.axis.JIIKK", om(KernelKind::J0, 2, 2), pi / 4 * Z, kOsc, p.bits, 0, prov), note));
    out.push_back(with_note(
        numeric_certificate("modular.axis.YIIKK", om(KernelKind::Y0, 2, 2), -5 * pi / 24 * Z, kOsc, p.bits, 0, prov),
        note));
    const BigFloat lhs = om(KernelKind::J0, 0, 4) - 2 * pi * om(KernelKind::Y0, 1, 3);
    out.push_back(with_note(
        numeric_certificate("modular.axis.JKKKK_YIKKK", lhs, pi * pi * pi / 4 * Z, kOsc, p.bits, 0, prov), note));
    return out;
  });

  list.add1("modular.YIKKK", [p, osc] {
    const BigFloat one(1L, p), pi = mpnum::pi(p);
    auto om = [&](KernelKind k, int a, int b) { return mpnum::offshell_moment({k, a, b, 1, one, false}, p, {}, osc).value; };
    const BigFloat lhs = pi * pi * om(KernelKind::J0, 2, 2);
    const BigFloat rhs = om(KernelKind::J0, 0, 4) - 2 * pi * om(KernelKind::Y0, 1, 3);
    return with_note(numeric_certificate("modular.YIKKK.u=-1", lhs, rhs, kOsc, p.bits, 0,
                                         {"J0 transform of [pi I0 K0]^2 through K0^4 and Y0 I0 K0^3"}),
                     "x = sqrt(-u) = 1");
  });
  return list;
}

ItemList basechange_items(const SuiteConfig& cfg) {
  ItemList list;
  const Precision p(cfg.precision_bits);
  for (const auto& [n, d] : {std::pair{1L, 1L}, {1L, 2L}})
    list.add("basechange.y" + std::to_string(n) + "_" + std::to_string(d),
             [n = n, d = d, p] { return modular::cz_basechange_check(BigFloat(n, p) / d, p, {1e-20, true}); });
  list.add1("basechange.legendre", [p] {
    const BigFloat rhs = -9 * sqrt(BigFloat(3L, p)) / (4 * mpnum::pi(p));
    return numeric_certificate("basechange.legendre_moment", modular::legendre_moment(p), rhs, kRay, p.bits, 0,
                               {"int x P_{-1/3}(x)^3 P_{-1/3}(-x) dx over (-1, 1)"});
  });
  return list;
}

ItemList kluyver_items(const SuiteConfig& cfg) {
  ItemList list;
  const Precision p(cfg.precision_bits);
  const auto osc = osc_options(cfg);
  list.add1("kluyver.p7_L1", [p] {
    const BigFloat pi = mpnum::pi(p);
    const BigFloat v = mpnum::kluyver_p7(BigFloat(1L, p), p).value / 35;
    return numeric_certificate("kluyver.p7_L1", v, modular::lvalue_f66(1, p) / (9 * pi * pi), {1e-15, true}, p.bits, 0,
                               {"p7(1) through I/K moments against L(f66, 1)"});
  });
  list.add1("kluyver.p7_direct", [p, osc] {
    const BigFloat one(1L, p);
    return numeric_certificate("kluyver.p7_direct", mpnum::kluyver_direct(7, one, p, osc).value,
                               mpnum::kluyver_p7(one, p).value, {1e-8, true}, p.bits, 0,
                               {"oscillatory p7(1) against the I/K representation"});
  });
  list.add1("kluyver.p7_slope", [p, osc] {
    const BigFloat one(1L, p);
    return numeric_certificate("kluyver.p7_slope", mpnum::p7_slope_direct(p, osc).value,
                               -mpnum::kluyver_p7(one, p).value / 4, kOsc, p.bits, 0,
                               {"d/dx [p7(x)/x] at x = 1 against -p7(1)/4"});
  });
  list.add1("kluyver.p7_limit", [p] {
    const BigFloat pi = mpnum::pi(p), pi2 = pi * pi;
    const mpnum::LimitFit fit = mpnum::p7_limit(p);
    const BigFloat rhs = 19 * modular::lvalue_f66(1, p) / (648 * pi2) + 7 * mpnum::log2_const(p) / (72 * pi2 * pi2);
    Certificate c = numeric_certificate("kluyver.p7_limit", fit.value, rhs, {1e-4, true}, p.bits, 0,
                                        {"left limit at x = 1 of p3/(12 pi^2 x) + (p7/(35x))''"});
    c.note = "extrapolated from x = 1 - 2^-k, k = 6..10; fit spread " + fit.spread.to_string(kResidualDigits);
    return c;
  });
  return list;
}

}  // namespace bmlab::cli::detail
