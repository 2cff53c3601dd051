#include "bmlab/sumrule/verify.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "bmlab/mpnum/moments.hpp"

namespace bmlab::sumrule {

using mpnum::BigFloat;
using mpnum::Precision;

cli::Certificate verify_sumrule(int n, int a, Precision p, cli::Tolerance tol) {
  if (n < 1) throw std::domain_error("verify_sumrule: n >= 1 required");
  const int b = n + 2 - a;
  if (a < 0 || b <= a) throw std::domain_error("verify_sumrule: need a = 0 or 1 <= a < (n+2)/2");
  const SumRulePoly f = sumrule_poly(n);
  std::vector<int> powers;
  for (int k = 0; k <= f.f.degree(); ++k) powers.push_back(2 * k + 1);
  const auto m = mpnum::ikm_batch(a, b, powers, p);
  BigFloat sum(p), scale(p);
  for (int k = 0; k <= f.f.degree(); ++k) {
    const BigFloat term = BigFloat(f.f.coeff(k), p) * m[static_cast<size_t>(k)].value;
    sum += term;
    scale += abs(term);
  }
  const std::string id = "sumrule.n" + std::to_string(n) + ".a" + std::to_string(a);
  if (a == 0) {
    const BigFloat target(BigRational(exact::factorial(static_cast<unsigned>(n + 1))), p);
    return cli::numeric_certificate(id, sum, target, tol, p.bits, 0, {"vacuum sum rule, weight f_n(t^2)"});
  }
  return cli::scaled_zero_certificate(id, sum, scale, tol, p.bits, 0, {"homogeneous sum rule, weight f_n(t^2)"});
}

BigFloat recurrence_residual(const MomentRecurrence& rec, int a, int b, const std::vector<int>& starts, Precision p) {
  if (a + b != rec.factor_count || b <= a) throw std::domain_error("recurrence_residual: need a + b = m and b > a");
  std::set<int> need;
  for (int s : starts)
    for (const auto& t : rec.terms) need.insert(s + t.shift);
  const std::vector<int> powers(need.begin(), need.end());
  const auto m = mpnum::ikm_batch(a, b, powers, p);
  auto moment = [&](int s) {
    for (size_t i = 0; i < powers.size(); ++i)
      if (powers[i] == s) return m[i].value;
    throw std::logic_error("recurrence_residual: missing moment");
  };
  BigFloat worst(p);
  for (int s : starts) {
    BigFloat sum(p), scale(p);
    for (const auto& t : rec.terms) {
      const BigFloat term = BigFloat(t.coeff.eval(BigRational(s)), p) * moment(s + t.shift);
      sum += term;
      scale += abs(term);
    }
    worst = max(worst, abs(sum) / scale);
  }
  return worst;
}

}  // namespace bmlab::sumrule
