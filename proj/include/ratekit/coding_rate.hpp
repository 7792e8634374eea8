#pragma once

// Per-stage coding-rate recursion of hierarchical cooperation:
//   R(1) = log2(1 + SNR/(1 + P_I)),  R(t+1) = relay rate with backhaul Q R(t), N0 = 1 + P_I.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace ratekit {

enum class RelayScheme { qmf_optimal, qf };

std::string_view to_string(RelayScheme s) noexcept;

inline constexpr std::int64_t kInterferenceRingNodes = 1'000'000;

// SNR, reuse factor and interference budget shared by every stage.
struct OperatingPoint {
  double alpha = 3.0;
  double snr = 1.0;
  int reuse = 2;
  double p_i = 0.0;

  // alpha-optimal SNR and TIN reuse factor unless overridden; P_I is the ring bound over
  // floor(sqrt(ring_nodes)) rings.
  static OperatingPoint hierarchical(double alpha, std::optional<double> snr = std::nullopt,
                                     std::optional<int> reuse = std::nullopt,
                                     std::int64_t ring_nodes = kInterferenceRingNodes);

  double local_rate() const;
};

struct CodingRateSequence {
  double alpha = 0.0;
  int q = 1;
  RelayScheme relay_scheme = RelayScheme::qmf_optimal;
  std::vector<double> rates;  // rates[k] = R^(k+1)
  double r_star = 0.0;        // last iterate
  bool converged = false;     // last step moved less than 1e-9
  bool collapsed = false;     // backhaul hit zero; trailing entries are 0

  // Rate of stage t (1-based).
  double at(int t) const;
};

// One relay step: rate of the distributed MIMO channel with backhaul `backhaul`.
double relay_rate(const OperatingPoint& op, double backhaul, RelayScheme scheme);

CodingRateSequence rate_sequence(const OperatingPoint& op, int q, RelayScheme scheme, int t_max);
CodingRateSequence rate_sequence(double alpha, int q, RelayScheme scheme, int t_max);

inline constexpr int kFixedPointMaxIterations = 10'000;

// Iterates the recursion until successive rates differ by less than tol.
// Throws ConvergenceError (carrying the last iterate) after kFixedPointMaxIterations.
double rate_fixed_point(const OperatingPoint& op, int q, RelayScheme scheme, double tol = 1e-9);
double rate_fixed_point(double alpha, int q, RelayScheme scheme, double tol = 1e-9);

// R_c(alpha) = R*(alpha, 2) with optimal quantization.
double coding_rate_limit(double alpha);

struct Lemma1Report {
  bool passed = false;
  double local = 0.0;       // R^(1)
  double margin_qmf = 0.0;  // R^(1) - QMF rate at backhaul q R^(1)
  double margin_qf = 0.0;
};

Lemma1Report lemma1_bound_check(double alpha, int q);

}  // namespace ratekit
