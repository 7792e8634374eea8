#pragma once

// Network and channel primitives: the unit-area node grid, pathloss, power rules,
// TDMA spatial reuse, and inter-cluster interference budgets.

#include <cstdint>
#include <string_view>
#include <utility>

namespace ratekit {

// sqrt(n) x sqrt(n) nodes on the unit square with spacing 1/sqrt(n).
class GridNetwork {
 public:
  // Throws InvalidParameter unless n is a positive perfect square.
  explicit GridNetwork(std::int64_t n);

  std::int64_t node_count() const noexcept { return side_ * side_; }
  std::int64_t side() const noexcept { return side_; }
  double spacing() const noexcept { return 1.0 / static_cast<double>(side_); }

  // Node (i, j) sits at (i / side, j / side).
  std::pair<double, double> position(std::int64_t i, std::int64_t j) const;

 private:
  std::int64_t side_;
};

enum class PhaseModel { uniform_phase, complex_gaussian };

struct PathlossChannel {
  double alpha = 3.0;
  PhaseModel phase = PhaseModel::uniform_phase;

  void validate() const;
  // |h| = r^(-alpha/2).
  double gain_magnitude(double distance) const;
};

inline constexpr double kDefaultSnrMax = 0x1.0p80;

// Per-node power rules. Powers are expressed relative to unit noise.
struct PowerPolicy {
  double snr_local = 1.0;
  double snr_mimo = 1.0;
  double snr_max = kDefaultSnrMax;
  double cluster_area = 1.0;

  static PowerPolicy uniform(double snr, double cluster_area);
  void validate() const;
  // P = SNR * A^(alpha/2).
  double local_power(double alpha) const;
  // (SNR'/M) * A^(alpha/2) per node during the long-range phase.
  double mimo_power(double alpha, double cluster_nodes) const;
};

// Reuse-L TDMA over the cluster grid: cluster (u, v) transmits in slot (u mod L, v mod L).
struct TdmaConfig {
  int reuse = 2;

  void validate() const;
  int slot_count() const noexcept { return reuse * reuse; }
  bool is_active(std::int64_t u, std::int64_t v, int slot_u, int slot_v) const noexcept;
};

enum class InterferenceMethod { ring_bound, dominant, exact_grid };

std::string_view to_string(InterferenceMethod m) noexcept;

struct InterferenceBudget {
  double p_i = 0.0;
  InterferenceMethod method = InterferenceMethod::ring_bound;
};

struct TinCheck {
  bool holds = false;
  // 10 log10(sqrt(SNR) / INR); non-negative iff the condition holds.
  double margin_db = 0.0;
};

// ceil(snr^(1/(2 alpha)) + 1).
int reuse_factor(double snr, double alpha);

// 2^(2(3 + alpha/ln 2)).
double optimal_snr_single_stage(double alpha);

// 2^(2(3 + alpha/(2 ln 2))).
double optimal_snr_multihop(double alpha);

// Sum over rings i = 1..floor(sqrt(n)) of 8i * snr * (L i - 1)^(-alpha).
InterferenceBudget interference_power_bound(std::int64_t n, double snr, int reuse, double alpha);

// First ring only: 8 * snr * (L - 1)^(-alpha).
InterferenceBudget interference_power_dominant(double snr, int reuse, double alpha);

// Receiver at the network centre; one transmitter per co-active cluster, placed at the
// cluster node nearest the receiver. cluster_side (nodes) must divide grid.side().
InterferenceBudget interference_power_exact(const GridNetwork& grid, int reuse, double alpha,
                                            double snr, std::int64_t cluster_side);

// log2(1 + snr / (1 + p_i)).
double local_rate(double snr, double p_i);

// INR = (L-1)^(-alpha) snr against sqrt(snr).
TinCheck tin_condition_holds(double snr, int reuse, double alpha);

}  // namespace ratekit
