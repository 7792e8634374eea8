#pragma once

// Throughput and sum-rate formulas for the single-stage cooperative scheme and the
// hierarchical methods 1-4, with cluster-size and stage-count optimization.

#include <cstdint>
#include <optional>
#include <vector>

#include "ratekit/coding_rate.hpp"
#include "ratekit/rate_breakdown.hpp"

namespace ratekit {

struct SchemeOverrides {
  std::optional<double> snr;
  std::optional<int> reuse;
  std::optional<double> cluster_size;  // single-stage only
};

struct SchemeConfig {
  std::int64_t n = 10'000;
  double alpha = 3.0;
  Method method = Method::m4;
  std::optional<int> t;  // nullopt: optimize over stages
  std::optional<int> q;  // nullopt: optimize over {1, 2}
  int t_max = 8;
  RelayScheme relay = RelayScheme::qmf_optimal;
  ConstantsVariant constants = ConstantsVariant::derivation;
  CodingRateIndex rate_index = CodingRateIndex::stage_count_plus_one;
  SchemeOverrides overrides;

  void validate() const;
};

// Normalized slot count to finish the local exchange inside an n-node cluster.
struct SlotBudget {
  Method method = Method::m2;
  int t = 1;
  double f_t = 0.0;
  double long_range_slots = 0.0;  // (n/M) * c n term of the outermost level
  double local_slots = 0.0;       // (n/M) * k F_{t-1}(M) term
  std::vector<double> cluster_sizes;  // minimizing M per nested level, outermost first
};

// Theorem-1 scheme: coding rate local_rate(SNR, P_I(n)), throughput sqrt(n)/(2 L sqrt(1+q)),
// cluster size sqrt(n)/(L sqrt(1+q)). A fixed cluster size M gives n M / (L^2 (1+q) M^2 + n).
// Throws InfeasibleConfiguration if M rounds outside [1, n].
RateBreakdown single_stage_sum_rate(std::int64_t n, double alpha, std::optional<double> snr = std::nullopt,
                                    std::optional<int> reuse = std::nullopt, int q = 1,
                                    std::optional<double> cluster_size = std::nullopt);

// alpha sqrt(n) / ((2 sqrt(2) ln 2) 2^(3/alpha + 1/ln 2)).
double approx_sum_rate(std::int64_t n, double alpha);

// Closed form t c k^((t-1)/2) n^((t+1)/t); methods m2, m3, m4 only.
SlotBudget slot_budget(Method method, double n, int t, int reuse, int q);

inline constexpr int kSlotRecursionMaxStages = 8;

// Evaluates F_t(n) = min_M (n/M)(c n + k F_{t-1}(M)) by nested golden-section search
// over log M in [0, log n]. Independent of the closed form.
SlotBudget slot_budget_recursive(Method method, double n, int t, int reuse, int q);

// n^(t/(t+1)) / denominator(method, t, L, q).
double hier_throughput(Method method, double n, int t, int reuse, int q,
                       ConstantsVariant constants = ConstantsVariant::derivation);

// Implied cluster sizes of a t-stage scheme, outermost first.
std::vector<double> hier_cluster_sizes(Method method, double n, int t, int reuse, int q,
                                       ConstantsVariant constants = ConstantsVariant::derivation);

// Sum rate coding_rate * hier_throughput. Throws InfeasibleConfiguration when a cluster
// size rounds outside [1, n].
RateBreakdown hier_sum_rate(Method method, std::int64_t n, double alpha, int t, int q, double coding_rate,
                            ConstantsVariant constants = ConstantsVariant::derivation,
                            std::optional<int> reuse = std::nullopt);

// Cluster size as printed for the network-multiple-access method; not the maximizer
// (that is (1+t) T). Exposed for comparison.
double literal_nmac_cluster_size(double n, int t, int reuse, int q);

struct StageCountEstimate {
  double t_real = 0.0;
  int t_integer = 1;
};

// t = -1 + (-1 + sqrt(1 + 2 ln(n/L) ln 3)) / ln 3; the integer is the better of floor/ceil
// under the method-2 throughput with Q = 2.
StageCountEstimate optimal_stage_count_method2(double n, int reuse);

struct StageSearch {
  int t = 1;
  std::vector<double> sum_rates;  // index t-1; NaN where infeasible
};

struct SearchOptions {
  RelayScheme relay = RelayScheme::qmf_optimal;
  ConstantsVariant constants = ConstantsVariant::derivation;
  CodingRateIndex rate_index = CodingRateIndex::stage_count_plus_one;
  int t_max = 12;
  std::optional<int> reuse;
  std::optional<double> snr;
  std::optional<int> t_fixed;  // best_sum_rate: evaluate this t only
  std::optional<int> q_fixed;  // best_sum_rate: evaluate this q only
};

// argmax over t in 1..t_max of the sum rate with per-t coding rates; ties go to smaller t.
StageSearch optimal_stage_count_search(Method method, std::int64_t n, double alpha, int q,
                                       const SearchOptions& options = {});

// Coding rate bounding a t-stage scheme under the given index policy.
double stage_coding_rate(const CodingRateSequence& seq, int t, CodingRateIndex index);

// max over t in 1..t_max and q in {1, 2} (q = 2 only for theorem3 constants), unless fixed.
// Ties: smaller t, then smaller q.
RateBreakdown best_sum_rate(Method method, std::int64_t n, double alpha, const SearchOptions& options = {.t_max = 8});

// Method 1 with L fixed to 3, QF coding-rate chain and q = 1, at the alpha-optimal SNR.
RateBreakdown original_hc_baseline(std::int64_t n, double alpha,
                                   CodingRateIndex index = CodingRateIndex::stage_count_plus_one);

}  // namespace ratekit
