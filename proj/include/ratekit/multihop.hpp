#pragma once

// Multihop routing baseline: nearest-neighbour hops under reuse-L TDMA with cluster size 1.

#include <cstdint>
#include <vector>

#include "ratekit/rate_breakdown.hpp"

namespace ratekit {

// log2(1 + SNR/(1 + P_I)) * sqrt(n) / (2 L^2) at the multihop-optimal SNR; P_I is the ring
// bound over floor(sqrt(n)) rings.
RateBreakdown multihop_sum_rate_lower(std::int64_t n, double alpha);

// Twice the lower bound (denominator L^2).
RateBreakdown multihop_sum_rate_avg(std::int64_t n, double alpha);

struct RoutingTrafficStats {
  std::int64_t n = 0;
  std::int64_t side = 0;
  std::vector<std::int64_t> node_counts;  // transits summed over trials, row-major
  std::vector<std::int64_t> center_per_trial;
  std::int64_t max_center = 0;  // max over trials of the centre-node count
  std::int64_t max_node = 0;    // max over trials and nodes of a single-trial count
  double mean_center = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
};

inline constexpr int kDerangementMaxAttempts = 10'000;

// Each trial pairs sources with a uniform derangement (rejection over shuffles) and routes
// along the source row to the destination column, then along that column. Only transits
// count. The centre node is (side/2, side/2). Trial i draws from stream i of `seed`.
RoutingTrafficStats relay_traffic_montecarlo(std::int64_t n, int trials, std::uint64_t seed);

// Transit counts of one fixed permutation (dest[i] = destination of node i).
std::vector<std::int64_t> relay_traffic(std::int64_t side, const std::vector<std::int64_t>& dest);

}  // namespace ratekit
