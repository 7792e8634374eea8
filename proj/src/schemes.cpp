#include "ratekit/schemes.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include <fmt/format.h>

#include "ratekit/core_model.hpp"
#include "ratekit/error.hpp"

namespace ratekit {

namespace {

struct MethodName {
  Method method;
  std::string_view name;
};

constexpr std::array kMethodNames{
    MethodName{Method::single_stage, "single"}, MethodName{Method::m1, "m1"},
    MethodName{Method::m2, "m2"},               MethodName{Method::m3, "m3"},
    MethodName{Method::m4, "m4"},               MethodName{Method::multihop, "multihop"},
    MethodName{Method::multihop_avg, "multihop-avg"}, MethodName{Method::original_hc, "original-hc"},
};

bool is_hierarchical(Method m) {
  return m == Method::m1 || m == Method::m2 || m == Method::m3 || m == Method::m4;
}

void require_hierarchical(Method m) {
  if (!is_hierarchical(m))
    throw InvalidParameter(fmt::format("method {} has no hierarchical throughput", to_string(m)));
}

void check_stage_args(double n, int t, int reuse, int q) {
  if (!(n >= 1.0) || !std::isfinite(n)) throw InvalidParameter("n must be >= 1");
  if (t < 1) throw InvalidParameter("stage count t must be >= 1");
  if (reuse < 1) throw InvalidParameter("reuse factor L must be >= 1");
  if (q < 1) throw InvalidParameter("time-expansion factor q must be >= 1");
}

// F_1 = c n^2 and the recursion weight k on F_{t-1}.
struct SlotConstants {
  double c;
  double k;
};

SlotConstants slot_constants(Method m, int reuse, int q) {
  const double l2 = static_cast<double>(reuse) * reuse;
  switch (m) {
    case Method::m2: return {l2, 1.0 + q};
    case Method::m3: return {1.0, l2 * q};
    case Method::m4: return {l2, static_cast<double>(q)};
    default:
      throw InvalidParameter(fmt::format("slot budget is defined for m2, m3, m4 only, not {}", to_string(m)));
  }
}

// Written so that at t = 1 the m1/m3 and m2/m4 denominators are the same expression.
double denominator(Method m, int t, int reuse, int q, ConstantsVariant v) {
  const double tt = t;
  const double l = reuse;
  const double l_pow = (m == Method::m1 || m == Method::m3) ? std::pow(l, t) : std::pow(l, 2.0 * tt / (tt + 1.0));
  if (v == ConstantsVariant::theorem3) {
    if (m == Method::m1 || m == Method::m2) return (1.0 + tt) * l_pow * std::pow(std::sqrt(3.0), t);
    return (1.0 + tt) * l_pow * std::pow(3.0 * std::pow(2.0, tt - 1.0), tt / (2.0 * (tt + 1.0)));
  }
  const double qq = q;
  if (m == Method::m1 || m == Method::m2) return (1.0 + tt) * l_pow * std::pow(1.0 + qq, tt / 2.0);
  return (1.0 + tt) * l_pow * std::pow((1.0 + qq) * std::pow(qq, (tt - 1.0) / 2.0), tt / (tt + 1.0));
}

int effective_q(int q, ConstantsVariant v) { return v == ConstantsVariant::theorem3 ? 2 : q; }

void check_feasible(const std::vector<double>& sizes, double n, Method m, int t) {
  for (double s : sizes) {
    const double r = std::round(s);
    if (!(r >= 1.0) || r > n)
      throw InfeasibleConfiguration(
          fmt::format("{} with t={} at n={:g}: cluster size {:.6g} outside [1, n]", to_string(m), t, n, s));
  }
}

// Golden-section minimization of F_j over log M in [0, log n].
class SlotRecursion {
 public:
  SlotRecursion(SlotConstants sc) : sc_(sc) {}

  double value(int j, double n) const {
    if (j == 1) return sc_.c * n * n;
    return minimize(j, n).second;
  }

  // (argmin M, minimum) of (n/M)(c n + k F_{j-1}(M)).
  std::pair<double, double> minimize(int j, double n) const {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 0.0;
    double b = std::log(n);
    auto g = [&](double x) {
      const double m = std::exp(x);
      return (n / m) * (sc_.c * n + sc_.k * value(j - 1, m));
    };
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double g1 = g(x1);
    double g2 = g(x2);
    int it = 0;
    while (b - a > kWidth) {
      if (++it > kMaxIterations)
        throw ConvergenceError(fmt::format("golden-section stalled at level {} with bracket [{:.17g}, {:.17g}]",
                                           j, std::exp(a), std::exp(b)),
                               std::exp(0.5 * (a + b)));
      if (g1 <= g2) {
        b = x2;
        x2 = x1;
        g2 = g1;
        x1 = b - invphi * (b - a);
        g1 = g(x1);
      } else {
        a = x1;
        x1 = x2;
        g1 = g2;
        x2 = a + invphi * (b - a);
        g2 = g(x2);
      }
    }
    // Endpoints are candidates too: the interior search never evaluates them.
    double best_x = g1 <= g2 ? x1 : x2;
    double best = std::min(g1, g2);
    for (double x : {0.0, std::log(n)}) {
      const double v = g(x);
      if (v < best) {
        best = v;
        best_x = x;
      }
    }
    if (!std::isfinite(best))
      throw ConvergenceError(fmt::format("non-finite slot budget at level {} with bracket [{:.17g}, {:.17g}]", j,
                                         std::exp(a), std::exp(b)),
                             best);
    return {std::exp(best_x), best};
  }

 private:
  static constexpr double kWidth = 1e-7;
  static constexpr int kMaxIterations = 200;
  SlotConstants sc_;
};

}  // namespace

std::string_view to_string(Method m) noexcept {
  for (const auto& e : kMethodNames)
    if (e.method == m) return e.name;
  return "unknown";
}

std::optional<Method> parse_method(std::string_view s) noexcept {
  for (const auto& e : kMethodNames)
    if (e.name == s) return e.method;
  if (s == "single-stage") return Method::single_stage;
  if (s == "multihop-lower") return Method::multihop;
  return std::nullopt;
}

std::string_view to_string(ConstantsVariant v) noexcept {
  return v == ConstantsVariant::derivation ? "derivation" : "theorem3";
}

std::optional<ConstantsVariant> parse_constants(std::string_view s) noexcept {
  if (s == "derivation") return ConstantsVariant::derivation;
  if (s == "theorem3") return ConstantsVariant::theorem3;
  return std::nullopt;
}

void SchemeConfig::validate() const {
  if (n < 4) throw InvalidParameter("n must be >= 4");
  if (!(alpha > 2.0) || !std::isfinite(alpha)) throw InvalidParameter("alpha must be > 2");
  if (t && *t < 1) throw InvalidParameter("t must be >= 1");
  if (q && *q < 1) throw InvalidParameter("q must be >= 1");
  if (t_max < 1) throw InvalidParameter("t_max must be >= 1");
  if (overrides.snr && !(*overrides.snr > 0.0 && *overrides.snr <= kDefaultSnrMax))
    throw InvalidParameter("snr override must lie in (0, 2^80]");
  if (overrides.reuse && *overrides.reuse < 2) throw InvalidParameter("reuse override L must be >= 2");
  if (overrides.cluster_size && !(*overrides.cluster_size >= 1.0 && *overrides.cluster_size <= n))
    throw InvalidParameter("cluster-size override must lie in [1, n]");
}

RateBreakdown single_stage_sum_rate(std::int64_t n, double alpha, std::optional<double> snr,
                                    std::optional<int> reuse, int q, std::optional<double> cluster_size) {
  if (n < 1) throw InvalidParameter("n must be >= 1");
  if (q < 1) throw InvalidParameter("time-expansion factor q must be >= 1");
  PathlossChannel{alpha}.validate();
  RateBreakdown r;
  r.method = Method::single_stage;
  r.snr = snr.value_or(optimal_snr_single_stage(alpha));
  if (!(r.snr > 0.0)) throw InvalidParameter("snr must be positive");
  r.reuse = reuse.value_or(reuse_factor(r.snr, alpha));
  if (r.reuse < 1) throw InvalidParameter("reuse factor L must be >= 1");
  r.q_used = q;
  r.t_used = 1;
  r.p_i = interference_power_bound(n, r.snr, r.reuse, alpha).p_i;
  r.coding_rate = local_rate(r.snr, r.p_i);
  const double nd = static_cast<double>(n);
  const double a = r.reuse * std::sqrt(1.0 + q);
  double m = std::sqrt(nd) / a;
  if (cluster_size) {
    m = *cluster_size;
    r.packet_throughput = nd * m / (a * a * m * m + nd);
  } else {
    r.packet_throughput = m / 2.0;
  }
  r.cluster_sizes = {m};
  if (std::round(m) < 1.0 || std::round(m) > nd)
    throw InfeasibleConfiguration(fmt::format("single-stage cluster size {:.6g} outside [1, {}]", m, n));
  r.sum_rate = r.coding_rate * r.packet_throughput;
  return r;
}

double approx_sum_rate(std::int64_t n, double alpha) {
  PathlossChannel{alpha}.validate();
  const double ln2 = std::log(2.0);
  return alpha * std::sqrt(static_cast<double>(n)) /
         ((2.0 * std::sqrt(2.0) * ln2) * std::pow(2.0, 3.0 / alpha + 1.0 / ln2));
}

SlotBudget slot_budget(Method method, double n, int t, int reuse, int q) {
  check_stage_args(n, t, reuse, q);
  const SlotConstants sc = slot_constants(method, reuse, q);
  const double tt = t;
  SlotBudget b;
  b.method = method;
  b.t = t;
  b.f_t = tt * sc.c * std::pow(sc.k, (tt - 1.0) / 2.0) * std::pow(n, (tt + 1.0) / tt);
  if (t == 1) {
    b.long_range_slots = b.f_t;
    return b;
  }
  double size = n;
  for (int j = t; j >= 2; --j) {
    const double jj = j;
    size = std::pow(size, (jj - 1.0) / jj) / std::pow(sc.k, (jj - 1.0) / 2.0);
    b.cluster_sizes.push_back(size);
  }
  const double m = b.cluster_sizes.front();
  b.long_range_slots = (n / m) * sc.c * n;
  b.local_slots = b.f_t - b.long_range_slots;
  return b;
}

SlotBudget slot_budget_recursive(Method method, double n, int t, int reuse, int q) {
  check_stage_args(n, t, reuse, q);
  if (t > kSlotRecursionMaxStages)
    throw InvalidParameter(fmt::format("recursive slot budget supports t <= {}", kSlotRecursionMaxStages));
  const SlotConstants sc = slot_constants(method, reuse, q);
  const SlotRecursion rec(sc);
  SlotBudget b;
  b.method = method;
  b.t = t;
  if (t == 1) {
    b.f_t = sc.c * n * n;
    b.long_range_slots = b.f_t;
    return b;
  }
  double size = n;
  for (int j = t; j >= 2; --j) {
    const auto [m, value] = rec.minimize(j, size);
    if (j == t) {
      b.f_t = value;
      b.long_range_slots = (n / m) * sc.c * n;
      b.local_slots = value - b.long_range_slots;
    }
    b.cluster_sizes.push_back(m);
    size = m;
  }
  return b;
}

double hier_throughput(Method method, double n, int t, int reuse, int q, ConstantsVariant constants) {
  require_hierarchical(method);
  check_stage_args(n, t, reuse, q);
  const double tt = t;
  return std::pow(n, tt / (tt + 1.0)) / denominator(method, t, reuse, q, constants);
}

std::vector<double> hier_cluster_sizes(Method method, double n, int t, int reuse, int q,
                                       ConstantsVariant constants) {
  const double top = (1.0 + t) * hier_throughput(method, n, t, reuse, q, constants);
  const int qe = effective_q(q, constants);
  std::vector<double> sizes{top};
  double size = top;
  if (method == Method::m1) {
    const double a = reuse * std::sqrt(1.0 + qe);
    for (int j = t; j >= 2; --j) {
      const double jj = j;
      size = std::pow(size / std::pow(a, jj), (jj - 1.0) / jj);
      sizes.push_back(size);
    }
  } else {
    const double k = slot_constants(method, reuse, qe).k;
    for (int j = t; j >= 2; --j) {
      const double jj = j;
      size = std::pow(size, (jj - 1.0) / jj) / std::pow(k, (jj - 1.0) / 2.0);
      sizes.push_back(size);
    }
  }
  return sizes;
}

RateBreakdown hier_sum_rate(Method method, std::int64_t n, double alpha, int t, int q, double coding_rate,
                            ConstantsVariant constants, std::optional<int> reuse) {
  require_hierarchical(method);
  PathlossChannel{alpha}.validate();
  if (!(coding_rate >= 0.0)) throw InvalidParameter("coding rate must be non-negative");
  const double snr = optimal_snr_single_stage(alpha);
  const int l = reuse.value_or(reuse_factor(snr, alpha));
  const double nd = static_cast<double>(n);
  RateBreakdown r;
  r.method = method;
  r.t_used = t;
  r.q_used = effective_q(q, constants);
  r.reuse = l;
  r.snr = snr;
  r.coding_rate = coding_rate;
  r.packet_throughput = hier_throughput(method, nd, t, l, q, constants);
  r.cluster_sizes = hier_cluster_sizes(method, nd, t, l, q, constants);
  check_feasible(r.cluster_sizes, nd, method, t);
  r.sum_rate = r.coding_rate * r.packet_throughput;
  return r;
}

double literal_nmac_cluster_size(double n, int t, int reuse, int q) {
  check_stage_args(n, t, reuse, q);
  const double tt = t;
  const double e = tt / (tt + 1.0);
  return std::pow(reuse, tt) * std::pow(1.0 + q, e) * std::pow(q, tt * (tt - 1.0) / (2.0 * (tt + 1.0))) *
         std::pow(n, e);
}

StageCountEstimate optimal_stage_count_method2(double n, int reuse) {
  if (reuse < 1) throw InvalidParameter("reuse factor L must be >= 1");
  if (!(n > reuse)) throw InvalidParameter("stage-count estimate needs n > L");
  const double ln3 = std::log(3.0);
  StageCountEstimate e;
  e.t_real = -1.0 + (-1.0 + std::sqrt(1.0 + 2.0 * std::log(n / reuse) * ln3)) / ln3;
  const int lo = std::max(1, static_cast<int>(std::floor(e.t_real)));
  const int hi = std::max(1, static_cast<int>(std::ceil(e.t_real)));
  const double r_lo = hier_throughput(Method::m2, n, lo, reuse, 2);
  const double r_hi = hier_throughput(Method::m2, n, hi, reuse, 2);
  e.t_integer = r_hi > r_lo ? hi : lo;
  return e;
}

double stage_coding_rate(const CodingRateSequence& seq, int t, CodingRateIndex index) {
  return seq.at(index == CodingRateIndex::stage_count_plus_one ? t + 1 : t);
}

StageSearch optimal_stage_count_search(Method method, std::int64_t n, double alpha, int q,
                                       const SearchOptions& options) {
  require_hierarchical(method);
  if (options.t_max < 1) throw InvalidParameter("t_max must be >= 1");
  const OperatingPoint op = OperatingPoint::hierarchical(alpha, options.snr, options.reuse);
  const int qe = effective_q(q, options.constants);
  const CodingRateSequence seq = rate_sequence(op, qe, options.relay, options.t_max + 1);
  StageSearch s;
  double best = -1.0;
  for (int t = 1; t <= options.t_max; ++t) {
    double v = std::numeric_limits<double>::quiet_NaN();
    try {
      v = hier_sum_rate(method, n, alpha, t, q, stage_coding_rate(seq, t, options.rate_index), options.constants,
                        op.reuse)
              .sum_rate;
    } catch (const InfeasibleConfiguration&) {
    }
    s.sum_rates.push_back(v);
    if (v > best) {
      best = v;
      s.t = t;
    }
  }
  return s;
}

RateBreakdown best_sum_rate(Method method, std::int64_t n, double alpha, const SearchOptions& options) {
  require_hierarchical(method);
  if (options.t_max < 1) throw InvalidParameter("t_max must be >= 1");
  const OperatingPoint op = OperatingPoint::hierarchical(alpha, options.snr, options.reuse);
  std::vector<int> qs{1, 2};
  if (options.q_fixed) qs = {*options.q_fixed};
  if (options.constants == ConstantsVariant::theorem3) qs = {2};
  const int t_lo = options.t_fixed.value_or(1);
  const int t_hi = options.t_fixed.value_or(options.t_max);
  if (t_lo < 1) throw InvalidParameter("stage count t must be >= 1");
  std::optional<RateBreakdown> best;
  for (int q : qs) {
    if (q < 1) throw InvalidParameter("time-expansion factor q must be >= 1");
    const CodingRateSequence seq = rate_sequence(op, q, options.relay, t_hi + 1);
    for (int t = t_lo; t <= t_hi; ++t) {
      try {
        RateBreakdown r = hier_sum_rate(method, n, alpha, t, q, stage_coding_rate(seq, t, options.rate_index),
                                        options.constants, op.reuse);
        // Strict improvement keeps the earlier (smaller q, then smaller t) configuration on ties.
        if (!best || r.sum_rate > best->sum_rate ||
            (r.sum_rate == best->sum_rate && t < best->t_used)) {
          r.relay = options.relay;
          r.snr = op.snr;
          r.p_i = op.p_i;
          best = std::move(r);
        }
      } catch (const InfeasibleConfiguration&) {
      }
    }
  }
  if (!best)
    throw InfeasibleConfiguration(
        fmt::format("{} has no feasible (t, q) at n={} for t in [{}, {}]", to_string(method), n, t_lo, t_hi));
  return *best;
}

RateBreakdown original_hc_baseline(std::int64_t n, double alpha, CodingRateIndex index) {
  SearchOptions o;
  o.relay = RelayScheme::qf;
  o.reuse = 3;
  o.t_max = 8;
  o.rate_index = index;
  const OperatingPoint op = OperatingPoint::hierarchical(alpha, std::nullopt, 3);
  const CodingRateSequence seq = rate_sequence(op, 1, RelayScheme::qf, o.t_max + 1);
  std::optional<RateBreakdown> best;
  for (int t = 1; t <= o.t_max; ++t) {
    try {
      RateBreakdown r = hier_sum_rate(Method::m1, n, alpha, t, 1, stage_coding_rate(seq, t, index),
                                      ConstantsVariant::derivation, 3);
      if (!best || r.sum_rate > best->sum_rate) best = std::move(r);
    } catch (const InfeasibleConfiguration&) {
    }
  }
  if (!best) throw InfeasibleConfiguration(fmt::format("original-hc baseline infeasible at n={}", n));
  best->method = Method::original_hc;
  best->relay = RelayScheme::qf;
  best->p_i = op.p_i;
  return *best;
}

}  // namespace ratekit
