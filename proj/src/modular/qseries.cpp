#include "bmlab/modular/qseries.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace bmlab::modular {

using mpnum::BigComplex;
using mpnum::BigFloat;
using mpnum::Precision;

namespace {

bool is_integer(const BigRational& q) { return q.get_den() == 1; }

}  // namespace

QSeries::QSeries(BigRational lead, std::vector<BigRational> coeffs) : lead_(std::move(lead)), c_(std::move(coeffs)) {
  lead_.canonicalize();
  for (auto& c : c_) c.canonicalize();
}

QSeries QSeries::constant(const BigRational& c, int order) {
  std::vector<BigRational> cs(static_cast<size_t>(order), BigRational(0));
  if (order > 0) cs[0] = c;
  return QSeries(0, std::move(cs));
}

const BigRational& QSeries::coeff(int k) const {
  if (k < 0 || k >= order()) throw std::out_of_range("QSeries::coeff: index beyond truncation");
  return c_[static_cast<size_t>(k)];
}

QSeries QSeries::truncated(int n) const {
  QSeries out = *this;
  if (n < order()) out.c_.resize(static_cast<size_t>(n));
  return out;
}

QSeries QSeries::inverse() const {
  if (c_.empty() || c_[0] == 0) throw std::domain_error("QSeries::inverse: zero leading coefficient");
  const size_t n = c_.size();
  std::vector<BigRational> b(n);
  const BigRational inv0 = 1 / c_[0];
  b[0] = inv0;
  for (size_t k = 1; k < n; ++k) {
    BigRational s = 0;
    for (size_t j = 1; j <= k; ++j) s += c_[j] * b[k - j];
    b[k] = -s * inv0;
  }
  return QSeries(-lead_, std::move(b));
}

QSeries QSeries::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  QSeries result = constant(1, order());
  QSeries base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

QSeries QSeries::q_derivative() const {
  QSeries out = *this;
  for (size_t k = 0; k < c_.size(); ++k) out.c_[k] *= lead_ + BigRational(static_cast<long>(k));
  return out;
}

QSeries QSeries::substitute(int k) const {
  if (k < 1) throw std::invalid_argument("QSeries::substitute: k >= 1");
  if (c_.empty()) return QSeries(lead_ * k, {});
  std::vector<BigRational> out(static_cast<size_t>(k) * (c_.size() - 1) + 1, BigRational(0));
  for (size_t j = 0; j < c_.size(); ++j) out[j * static_cast<size_t>(k)] = c_[j];
  return QSeries(lead_ * k, std::move(out));
}

QSeries QSeries::normalized() const {
  size_t z = 0;
  while (z < c_.size() && c_[z] == 0) ++z;
  return QSeries(lead_ + BigRational(static_cast<long>(z)),
                 std::vector<BigRational>(c_.begin() + static_cast<long>(z), c_.end()));
}

BigComplex QSeries::eval_body(const BigComplex& q, Precision p) const {
  BigComplex s(p);
  for (size_t k = c_.size(); k-- > 0;) {
    s *= q;
    s.re() += BigFloat(c_[k], p);
  }
  return s;
}

QSeries& QSeries::operator*=(const QSeries& o) {
  const size_t n = std::min(c_.size(), o.c_.size());
  std::vector<BigRational> out(n, BigRational(0));
  for (size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; i + j < n; ++j) out[i + j] += c_[i] * o.c_[j];
  }
  lead_ += o.lead_;
  c_ = std::move(out);
  return *this;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  const BigRational shift = o.lead_ - lead_;
  if (!is_integer(shift)) throw std::invalid_argument("QSeries: leading exponents differ by a non-integer");
  const BigRational new_lead = shift < 0 ? o.lead_ : lead_;
  // absolute truncation exponent of the sum
  const BigRational end = std::min(lead_ + BigRational(order()), o.lead_ + BigRational(o.order()));
  const BigRational len = end - new_lead;
  const long n = std::max(0L, len.get_num().get_si());
  std::vector<BigRational> out(static_cast<size_t>(n), BigRational(0));
  auto accumulate = [&](const QSeries& s) {
    const long off = BigRational(s.lead_ - new_lead).get_num().get_si();
    for (long k = 0; k < s.order() && off + k < n; ++k) out[static_cast<size_t>(off + k)] += s.c_[static_cast<size_t>(k)];
  };
  const QSeries self = *this;
  accumulate(self);
  accumulate(o);
  lead_ = new_lead;
  c_ = std::move(out);
  return *this;
}

QSeries& QSeries::operator*=(const BigRational& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

bool agree(const QSeries& a, const QSeries& b) {
  if (a.lead_ != b.lead_) return false;
  const size_t n = std::min(a.c_.size(), b.c_.size());
  for (size_t k = 0; k < n; ++k)
    if (a.c_[k] != b.c_[k]) return false;
  return true;
}

QSeries eta_qseries(int scale, int order) {
  if (scale < 1 || order < 1) throw std::invalid_argument("eta_qseries: scale >= 1, order >= 1");
  std::vector<BigRational> c(static_cast<size_t>(order), BigRational(0));
  // sum_k (-1)^k q^{scale k(3k-1)/2} over k = 0, 1, -1, 2, -2, ...
  c[0] = 1;
  for (long k = 1;; ++k) {
    const long e1 = scale * k * (3 * k - 1) / 2;
    const long e2 = scale * k * (3 * k + 1) / 2;
    if (e1 >= order) break;
    const long sign = (k % 2 == 0) ? 1 : -1;
    c[static_cast<size_t>(e1)] += sign;
    if (e2 < order) c[static_cast<size_t>(e2)] += sign;
  }
  return QSeries(BigRational(scale, 24), std::move(c));
}

QSeries eta_product_direct(int scale, int order) {
  std::vector<BigRational> c(static_cast<size_t>(order), BigRational(0));
  c[0] = 1;
  for (long n = 1; scale * n < order; ++n) {
    const long e = scale * n;
    for (long k = order - 1; k >= e; --k) c[static_cast<size_t>(k)] -= c[static_cast<size_t>(k - e)];
  }
  return QSeries(0, std::move(c));
}

namespace {

ModularObjects build_objects(int order) {
  // two guard coefficients for the leading-exponent shift of alpha3
  const int n = order + 2;
  const QSeries e1 = eta_qseries(1, n), e2 = eta_qseries(2, n), e3 = eta_qseries(3, n), e6 = eta_qseries(6, n);
  ModularObjects m;
  m.order = order;
  const QSeries e13 = e1 * e3, e26 = e2 * e6, e23 = e2 * e3, e16 = e1 * e6;
  m.X63 = (e26 * e13.inverse()).pow(6).truncated(order);
  m.Z63 = (e13.pow(4) * e26.pow(-2)).truncated(order);
  m.f66 = (e23.pow(9) * e16.pow(-3) + e16.pow(9) * e23.pow(-3)).normalized().truncated(order);
  const QSeries ratio = e1.pow(12) * e3.pow(-12) * BigRational(1, 27);
  m.alpha3 = (ratio + QSeries::constant(1, n)).inverse().truncated(order);

  for (const QSeries* s : {&m.X63, &m.Z63, &m.f66, &m.alpha3})
    if (!is_integer(s->lead()) || s->order() < order)
      throw std::logic_error("modular_objects: unexpected exponent or truncation");
  const QSeries via_hauptmodul = m.Z63.pow(2) * m.X63.q_derivative();
  if (!agree(via_hauptmodul, m.f66))
    throw std::logic_error("modular_objects: f66 disagrees with Z63^2 q dX63/dq");
  return m;
}

}  // namespace

const ModularObjects& modular_objects(int order) {
  if (order < 20) throw std::invalid_argument("modular_objects: order >= 20");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<ModularObjects>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<ModularObjects>(build_objects(order));
  return *slot;
}

nlohmann::ordered_json coefficients_json(int count) {
  const ModularObjects& m = modular_objects(std::max(count, 20));
  nlohmann::ordered_json j;
  auto dump = [&](const char* name, const QSeries& s) {
    nlohmann::ordered_json o;
    o["leading_exponent"] = exact::to_string(s.lead());
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (int k = 0; k < count; ++k) cs.push_back(exact::to_string(s.coeff(k)));
    o["coefficients"] = cs;
    j[name] = o;
  };
  dump("X63", m.X63);
  dump("Z63", m.Z63);
  dump("f66", m.f66);
  dump("alpha3", m.alpha3);
  return j;
}

}  // namespace bmlab::modular
