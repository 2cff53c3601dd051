#pragma once

#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "bmlab/mpnum/bessel.hpp"
#include "bmlab/mpnum/bigfloat.hpp"

namespace bmlab::mpnum {

enum class ExecPolicy { Serial, Parallel };

/// Process-wide default used when QuadOptions does not override it.
void set_default_exec_policy(ExecPolicy p);
ExecPolicy default_exec_policy();

/// One abscissa of a doubly-exponential rule. `from_a` and `to_b` are the
/// distances to the interval ends computed without cancellation (to_b is
/// +inf on half-lines). `weight` includes the Jacobian but not the step.
struct QuadNode {
  BigFloat t, from_a, to_b, weight;
};

/// Doubly-exponential node generator on [a,b] (tanh-sinh) or [a,inf)
/// (t = a + exp(tau - exp(-tau)), tuned for integrands decaying like exp(-decay*t)).
/// Level 0 has step 1; level L > 0 contributes the odd multiples of 2^-L.
class DERule {
 public:
  static DERule finite(const BigFloat& a, const BigFloat& b, Precision p);
  static DERule half_line(const BigFloat& a, double decay, Precision p);

  Precision precision() const { return prec_; }
  bool is_half_line() const { return half_line_; }
  /// Nodes new at `level`; generated on first use.
  const std::vector<QuadNode>& level_nodes(int level) const;

 private:
  DERule(BigFloat a, BigFloat b, bool half_line, double decay, Precision p);
  QuadNode make_node(const BigFloat& tau) const;

  BigFloat a_, b_;
  bool half_line_;
  double decay_;
  Precision prec_;
  double tau_lo_, tau_hi_;
  std::shared_ptr<std::mutex> mu_ = std::make_shared<std::mutex>();
  mutable std::deque<std::vector<QuadNode>> levels_;
};

struct QuadOptions {
  int min_level = 3;
  int max_level = 12;
  /// Stop when every component satisfies |I_L - I_{L-1}| <= 2^-tol_bits * sum|w f|.
  /// 0 means precision-20.
  long tol_bits = 0;
  /// Also accept |I_L - I_{L-1}| <= abs_tol when set (for pieces small against a larger total).
  std::optional<BigFloat> abs_tol;
  ExecPolicy policy = default_exec_policy();
};

struct QuadResult {
  std::vector<BigFloat> values;
  /// Per component: max(|I_L - I_{L-1}|, rounding floor).
  std::vector<BigFloat> errors;
  int levels = 0;
  long evaluations = 0;
  bool converged = false;
};

/// Fills `out` (pre-sized to the component count) with f(node.t).
using NodeFunction = std::function<void(const QuadNode& node, std::span<BigFloat> out)>;

QuadResult integrate(const DERule& rule, size_t components, const NodeFunction& f, const QuadOptions& opt = {});

/// Integrand with the modified Bessel set I0,I1,K0,K1 at node.t supplied from a cache.
using BesselNodeFunction = std::function<void(const QuadNode& node, const ModifiedBesselSet& b, std::span<BigFloat> out)>;

/// Shared DE rule plus Bessel samples at its nodes, keyed by interval and precision.
class BesselTable {
 public:
  /// [0,1], tanh-sinh.
  static std::shared_ptr<BesselTable> unit(Precision p);
  /// [1,inf) with decay class rounded down to a power of two in [2^-24, 64].
  static std::shared_ptr<BesselTable> tail(double decay, Precision p);
  /// [a,b] with integer ends.
  static std::shared_ptr<BesselTable> finite(long a, long b, Precision p);
  static void clear_cache();

  const DERule& rule() const { return rule_; }
  const std::vector<ModifiedBesselSet>& level_samples(int level, ExecPolicy policy) const;

  explicit BesselTable(DERule rule) : rule_(std::move(rule)) {}

 private:
  DERule rule_;
  mutable std::mutex mu_;
  mutable std::deque<std::vector<ModifiedBesselSet>> samples_;
};

QuadResult integrate(const BesselTable& table, size_t components, const BesselNodeFunction& f, const QuadOptions& opt = {});

/// Evaluates fn(i) for i in [0, n) under the policy; exceptions are rethrown on the caller.
void for_each_index(size_t n, ExecPolicy policy, const std::function<void(size_t)>& fn);

}  // namespace bmlab::mpnum
