#include "ratekit/multihop.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "ratekit/core_model.hpp"
#include "ratekit/error.hpp"
#include "ratekit/parallel.hpp"
#include "ratekit/rng.hpp"

namespace ratekit {

RateBreakdown multihop_sum_rate_lower(std::int64_t n, double alpha) {
  if (n < 1) throw InvalidParameter("n must be >= 1");
  PathlossChannel{alpha}.validate();
  RateBreakdown r;
  r.method = Method::multihop;
  r.snr = optimal_snr_multihop(alpha);
  r.reuse = reuse_factor(r.snr, alpha);
  r.p_i = interference_power_bound(n, r.snr, r.reuse, alpha).p_i;
  r.coding_rate = local_rate(r.snr, r.p_i);
  r.packet_throughput = std::sqrt(static_cast<double>(n)) / (2.0 * r.reuse * r.reuse);
  r.cluster_sizes = {1.0};
  r.q_used = 0;
  r.sum_rate = r.coding_rate * r.packet_throughput;
  return r;
}

RateBreakdown multihop_sum_rate_avg(std::int64_t n, double alpha) {
  RateBreakdown r = multihop_sum_rate_lower(n, alpha);
  r.method = Method::multihop_avg;
  r.packet_throughput *= 2.0;
  r.sum_rate = r.coding_rate * r.packet_throughput;
  return r;
}

std::vector<std::int64_t> relay_traffic(std::int64_t side, const std::vector<std::int64_t>& dest) {
  const std::int64_t n = side * side;
  if (static_cast<std::int64_t>(dest.size()) != n) throw InvalidParameter("permutation size must be side^2");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
  for (std::int64_t s = 0; s < n; ++s) {
    const std::int64_t d = dest[static_cast<std::size_t>(s)];
    if (d < 0 || d >= n) throw InvalidParameter("destination index out of range");
    const std::int64_t row = s / side;
    const std::int64_t col_s = s % side;
    const std::int64_t row_d = d / side;
    const std::int64_t col_d = d % side;
    // Horizontal leg, excluding the source; the corner is included if it is not the destination.
    const std::int64_t step_c = col_d > col_s ? 1 : -1;
    for (std::int64_t c = col_s; c != col_d;) {
      c += step_c;
      const std::int64_t node = row * side + c;
      if (node != d) ++counts[static_cast<std::size_t>(node)];
    }
    const std::int64_t step_r = row_d > row ? 1 : -1;
    for (std::int64_t r = row; r != row_d;) {
      r += step_r;
      const std::int64_t node = r * side + col_d;
      if (node != d) ++counts[static_cast<std::size_t>(node)];
    }
  }
  return counts;
}

namespace {

std::vector<std::int64_t> sample_derangement(std::int64_t n, CounterRng& rng) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < kDerangementMaxAttempts; ++attempt) {
    std::iota(p.begin(), p.end(), std::int64_t{0});
    for (std::int64_t i = n - 1; i > 0; --i)
      std::swap(p[static_cast<std::size_t>(i)], p[rng.below(static_cast<std::uint64_t>(i + 1))]);
    bool fixed = false;
    for (std::int64_t i = 0; i < n && !fixed; ++i) fixed = p[static_cast<std::size_t>(i)] == i;
    if (!fixed) return p;
  }
  throw ConvergenceError(fmt::format("no derangement of {} nodes after {} shuffles", n, kDerangementMaxAttempts),
                         static_cast<double>(kDerangementMaxAttempts));
}

}  // namespace

RoutingTrafficStats relay_traffic_montecarlo(std::int64_t n, int trials, std::uint64_t seed) {
  const GridNetwork grid(n);
  if (n < 2) throw InvalidParameter("relay traffic needs at least 2 nodes");
  if (trials < 1) throw InvalidParameter("trials must be >= 1");
  const std::int64_t side = grid.side();
  const std::size_t center = static_cast<std::size_t>((side / 2) * side + side / 2);
  const auto per_trial = parallel_map(static_cast<std::size_t>(trials), [&](std::size_t i) {
    CounterRng rng(seed, i);
    return relay_traffic(side, sample_derangement(n, rng));
  });
  RoutingTrafficStats s;
  s.n = n;
  s.side = side;
  s.trials = trials;
  s.seed = seed;
  s.node_counts.assign(static_cast<std::size_t>(n), 0);
  for (const auto& counts : per_trial) {
    for (std::size_t k = 0; k < counts.size(); ++k) s.node_counts[k] += counts[k];
    s.center_per_trial.push_back(counts[center]);
    s.max_center = std::max(s.max_center, counts[center]);
    s.max_node = std::max(s.max_node, *std::max_element(counts.begin(), counts.end()));
  }
  s.mean_center = static_cast<double>(std::accumulate(s.center_per_trial.begin(), s.center_per_trial.end(),
                                                      std::int64_t{0})) /
                  trials;
  return s;
}

}  // namespace ratekit
