#pragma once

// Rates of the distributed MIMO channel with finite backhaul: large-system closed forms,
// the quantization-level bisection, and finite-M oracles used to check them.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace ratekit {

// Backhaul r0 (bits/symbol, may be +inf), noise-plus-interference n0 >= 1, sum SNR,
// and antenna count (nullopt = large-system limit).
struct QmfChannelSpec {
  double r0 = 0.0;
  double n0 = 1.0;
  double snr = 1.0;
  std::optional<int> antennas;

  void validate() const;
  // N0 / (2^R0 - 1): first QMF branch is exactly zero here.
  double sigma_min2() const;
  // (N0 + SNR) / (2^R0 - 1): the QF quantization level.
  double sigma_max2() const;
};

struct QuantizationLevel {
  double sigma_q2 = 0.0;
  std::vector<double> per_receiver;  // finite-M variant; empty for the symmetric level
};

struct QmfBranches {
  double backhaul = 0.0;  // R0 - log2(1 + N0/sigma^2)
  double mimo = 0.0;      // C(SNR / (N0 + sigma^2))
  double rate() const noexcept { return backhaul < mimo ? backhaul : mimo; }
};

struct QuantizationResult {
  QuantizationLevel level;
  double rate = 0.0;
  QmfBranches branches;
  int iterations = 0;
  // r0 == 0: rate is 0 and no quantization level exists.
  bool degenerate = false;
};

enum class Ensemble { uniform_phase, complex_gaussian };

// m x m channel with i.i.d. zero-mean unit-variance entries, reproducible from its seed.
struct FiniteChannelMatrix {
  Eigen::MatrixXcd h;
  Ensemble ensemble = Ensemble::uniform_phase;
  std::uint64_t seed = 0;

  static FiniteChannelMatrix draw(int m, Ensemble ensemble, std::uint64_t seed,
                                  std::uint64_t stream = 0);
  int size() const noexcept { return static_cast<int>(h.rows()); }
};

// Per-antenna large-system rate of an i.i.d. M x M channel at sum SNR x:
//   2 log2((1 + sqrt(1+4x))/2) - log2(e)/(4x) (sqrt(1+4x) - 1)^2.
double c_of_x(double x);

// (sqrt(x(1+sqrt z)^2 + 1) - sqrt(x(1-sqrt z)^2 + 1))^2.
double f_func(double x, double z);

// Limit of (1/M) logdet(I + (snr/M) H_S H_S^H) for a beta*M x M sub-matrix.
double c_of_beta(double snr, double beta);

double cutset_rate_asymptotic(const QmfChannelSpec& spec);
QmfBranches qmf_branches_asymptotic(const QmfChannelSpec& spec, double sigma_q2);
double qmf_rate_asymptotic(const QmfChannelSpec& spec, double sigma_q2);
double qf_rate_asymptotic(const QmfChannelSpec& spec);

inline constexpr int kBisectionMaxIterations = 200;

// Bisection on f(s) = backhaul branch - mimo branch over [sigma_min2, sigma_max2].
// Keeps f(lo) <= 0 <= f(hi) and returns hi once f(hi) < tol or after kBisectionMaxIterations
// halvings; tol = 0 runs to the resolution of double.
QuantizationResult optimal_quantization(const QmfChannelSpec& spec, double tol = 1e-9);

inline constexpr int kMaxEnumerationAntennas = 20;

// (1/M) min over all row subsets S (including the empty and full sets) of
//   sum_{i in S} (R0 - log2(1 + N0/sigma_i^2))
//   + logdet2(I + diag(SNR/(N0 + sigma_i^2)) H_{S^c} H_{S^c}^H / M).
double qmf_rate_finite(const FiniteChannelMatrix& h, double r0, double n0, double snr,
                       std::span<const double> sigma2);

// Same subset structure with the quantization penalty removed:
// (1/M) min_S |S| R0 + logdet2(I + (SNR/N0) H_{S^c} H_{S^c}^H / M).
double cutset_rate_finite(const FiniteChannelMatrix& h, double r0, double n0, double snr);

// Per-row QF levels sigma_i^2 = (N0 + (SNR/M)||h_i||^2) / (2^R0 - 1) plugged into the
// logdet with no subset minimization.
double qf_rate_finite(const FiniteChannelMatrix& h, double r0, double n0, double snr);

// logdet2(I + (snr/M) H_S H_S^H) over the rows listed in `rows`.
double logdet_rows(const FiniteChannelMatrix& h, double snr, std::span<const int> rows);

struct MonteCarloEstimate {
  double mean = 0.0;
  double stddev = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
};

// Mean of (1/m) logdet2(I + (snr/m) H H^H); trial k uses stream k of `seed`.
MonteCarloEstimate logdet_montecarlo(int m, double snr, Ensemble ensemble, int trials,
                                     std::uint64_t seed, double row_fraction = 1.0);

struct SubmodularityReport {
  bool passed = true;
  int trials = 0;
  double worst_violation = 0.0;  // max of (gain at B) - (gain at A); <= tol when passed
};

// Samples A subset B subset [1:m], x not in B, and checks
// f(A+x) - f(A) >= f(B+x) - f(B) for f(S) = logdet2(I + (snr/m) H_S H_S^H).
SubmodularityReport submodularity_check(const FiniteChannelMatrix& h, double snr, int trials,
                                        std::uint64_t seed, double tol = 1e-9);

}  // namespace ratekit
