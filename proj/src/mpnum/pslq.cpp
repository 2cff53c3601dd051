#include "bmlab/mpnum/pslq.hpp"

#include <cmath>
#include <stdexcept>

namespace bmlab::mpnum {

using exact::BigInt;

namespace {

BigInt round_to_int(const BigFloat& x) {
  BigFloat r = round(x);
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), r.raw(), MPFR_RNDN);
  return z;
}

BigFloat from_int(const BigInt& z, Precision p) {
  BigFloat r(p);
  mpfr_set_z(r.raw(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

}  // namespace

RelationSearch find_integer_relation(const std::vector<BigFloat>& values, Precision p, double height_bound) {
  const size_t n = values.size();
  if (n < 2) throw std::invalid_argument("integer_relation: need at least two values");
  if (p.bits < 128) throw std::invalid_argument("integer_relation: precision must be >= 128 bits");
  const long digits = p.digits();
  RelationSearch out{std::nullopt, BigFloat(p), BigFloat(p), height_bound};
  out.threshold = pow(BigFloat(10L, p), -(digits - 20));

  std::vector<BigFloat> x;
  for (const auto& v : values) x.push_back(v.at(p));
  for (const auto& v : x)
    if (v.is_zero()) {
      // trivial relation on a zero entry
      IntegerRelation rel{std::vector<BigInt>(n, 0), BigFloat(0L, p), out.threshold, 0};
      rel.coeffs[static_cast<size_t>(&v - x.data())] = 1;
      out.relation = rel;
      return out;
    }

  const BigFloat gamma = sqrt(BigFloat(4L, p) / BigFloat(3L, p));
  // s_k = sqrt(sum_{j>=k} x_j^2), then normalize
  std::vector<BigFloat> s(n, BigFloat(p));
  BigFloat acc(p);
  for (size_t k = n; k-- > 0;) {
    acc += x[k] * x[k];
    s[k] = sqrt(acc);
  }
  const BigFloat s0 = s[0];
  std::vector<BigFloat> y(n, BigFloat(p));
  for (size_t k = 0; k < n; ++k) {
    y[k] = x[k] / s0;
    s[k] /= s0;
  }
  std::vector<std::vector<BigFloat>> H(n, std::vector<BigFloat>(n - 1, BigFloat(p)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n - 1 && j <= i; ++j) {
      if (i == j) {
        H[i][j] = s[j + 1] / s[j];
      } else {
        H[i][j] = -(y[i] * y[j]) / (s[j] * s[j + 1]);
      }
    }
  std::vector<std::vector<BigInt>> A(n, std::vector<BigInt>(n, 0)), B(n, std::vector<BigInt>(n, 0));
  for (size_t i = 0; i < n; ++i) A[i][i] = B[i][i] = 1;

  auto reduce = [&]() {
    for (size_t i = 1; i < n; ++i)
      for (size_t j = std::min(i, n - 1); j-- > 0;) {
        if (H[j][j].is_zero()) continue;
        const BigInt t = round_to_int(H[i][j] / H[j][j]);
        if (t == 0) continue;
        const BigFloat tf = from_int(t, p);
        y[j] += tf * y[i];
        for (size_t k = 0; k <= j; ++k) H[i][k] -= tf * H[j][k];
        for (size_t k = 0; k < n; ++k) {
          A[i][k] -= t * A[j][k];
          B[k][j] += t * B[k][i];
        }
      }
  };
  reduce();

  const long max_iter = 200L * static_cast<long>(n) * static_cast<long>(n) + static_cast<long>(p.bits) * 8;
  for (long iter = 1; iter <= max_iter; ++iter) {
    // pick m maximizing gamma^(m+1) |H_mm|
    size_t m = 0;
    BigFloat best(p);
    BigFloat gpow = gamma;
    for (size_t i = 0; i < n - 1; ++i) {
      const BigFloat v = gpow * abs(H[i][i]);
      if (v > best) {
        best = v;
        m = i;
      }
      gpow *= gamma;
    }
    std::swap(y[m], y[m + 1]);
    std::swap(A[m], A[m + 1]);
    std::swap(H[m], H[m + 1]);
    for (size_t k = 0; k < n; ++k) std::swap(B[k][m], B[k][m + 1]);
    if (m + 1 < n - 1) {
      const BigFloat t0 = sqrt(H[m][m] * H[m][m] + H[m][m + 1] * H[m][m + 1]);
      const BigFloat t1 = H[m][m] / t0;
      const BigFloat t2 = H[m][m + 1] / t0;
      for (size_t i = m; i < n; ++i) {
        const BigFloat t3 = H[i][m];
        const BigFloat t4 = H[i][m + 1];
        H[i][m] = t1 * t3 + t2 * t4;
        H[i][m + 1] = t1 * t4 - t2 * t3;
      }
    }
    reduce();

    // candidate relation: smallest |y_j| gives column j of B
    size_t jmin = 0;
    for (size_t j = 1; j < n; ++j)
      if (abs(y[j]) < abs(y[jmin])) jmin = j;
    if (abs(y[jmin]) < out.threshold) {
      std::vector<BigInt> c(n);
      for (size_t k = 0; k < n; ++k) c[k] = B[k][jmin];
      BigInt height = 0;
      for (const auto& v : c) height = std::max(height, BigInt(abs(v)));
      if (height.get_d() >= height_bound) break;
      size_t first = 0;
      while (first < n && c[first] == 0) ++first;
      if (first < n && c[first] < 0)
        for (auto& v : c) v = -v;
      BigFloat resid(p);
      for (size_t k = 0; k < n; ++k) resid += from_int(c[k], p) * x[k];
      out.relation = IntegerRelation{c, abs(resid), out.threshold, iter};
      return out;
    }

    BigFloat hmax(p);
    for (size_t j = 0; j < n - 1; ++j) hmax = max(hmax, abs(H[j][j]));
    if (!hmax.is_zero()) {
      out.norm_bound = BigFloat(1L, p) / hmax;
      if (out.norm_bound.to_double() > height_bound * std::sqrt(static_cast<double>(n))) break;
    }
  }
  return out;
}

std::optional<std::vector<BigInt>> integer_relation(const std::vector<BigFloat>& values, Precision p) {
  auto r = find_integer_relation(values, p);
  if (!r.relation) return std::nullopt;
  return r.relation->coeffs;
}

}  // namespace bmlab::mpnum
