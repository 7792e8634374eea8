#include "ratekit/mimo_rate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "ratekit/error.hpp"
#include "ratekit/parallel.hpp"
#include "ratekit/rng.hpp"

namespace ratekit {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 2^r0 - 1, valid for r0 = +inf.
double backhaul_levels(double r0) { return std::isinf(r0) ? kInf : std::expm1(r0 * std::numbers::ln2); }

// log2 det of a Hermitian positive definite matrix.
double logdet2(const Eigen::MatrixXcd& a) {
  if (a.rows() == 0) return 0.0;
  Eigen::LLT<Eigen::MatrixXcd> llt(a);
  if (llt.info() != Eigen::Success) throw std::runtime_error("logdet: matrix not positive definite");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) sum += std::log(llt.matrixL()(i, i).real());
  return 2.0 * sum / std::numbers::ln2;
}

// Gram matrix H H^H / M.
Eigen::MatrixXcd gram(const FiniteChannelMatrix& h) {
  return h.h * h.h.adjoint() / static_cast<double>(h.size());
}

// log2 det(I + W^{1/2} G[rows, rows] W^{1/2}) for diagonal weights w over `rows`.
double weighted_logdet(const Eigen::MatrixXcd& g, std::span<const int> rows, std::span<const double> w) {
  const auto k = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXcd a(k, k);
  for (Eigen::Index r = 0; r < k; ++r) {
    for (Eigen::Index c = 0; c < k; ++c) {
      a(r, c) = std::sqrt(w[rows[r]] * w[rows[c]]) * g(rows[r], rows[c]);
    }
    a(r, r) += 1.0;
  }
  return logdet2(a);
}

void require_finite_size(const FiniteChannelMatrix& h) {
  if (h.size() < 1 || h.h.cols() != h.h.rows()) throw InvalidParameter("channel matrix must be square and non-empty");
}

void require_channel(double r0, double n0, double snr) {
  if (!(r0 >= 0.0)) throw InvalidParameter("backhaul capacity must be non-negative");
  if (!(n0 >= 1.0) || std::isinf(n0)) throw InvalidParameter("n0 must be finite and >= 1");
  if (!(snr >= 0.0) || std::isinf(snr)) throw InvalidParameter("snr must be finite and non-negative");
}

}  // namespace

void QmfChannelSpec::validate() const {
  require_channel(r0, n0, snr);
  if (!(snr > 0.0)) throw InvalidParameter("snr must be positive");
  if (antennas && *antennas < 1) throw InvalidParameter("antenna count must be positive");
}

double QmfChannelSpec::sigma_min2() const { return n0 / backhaul_levels(r0); }

double QmfChannelSpec::sigma_max2() const { return (n0 + snr) / backhaul_levels(r0); }

FiniteChannelMatrix FiniteChannelMatrix::draw(int m, Ensemble ensemble, std::uint64_t seed, std::uint64_t stream) {
  if (m < 1) throw InvalidParameter("matrix size must be positive");
  CounterRng rng(seed, stream);
  FiniteChannelMatrix out{Eigen::MatrixXcd(m, m), ensemble, seed};
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      if (ensemble == Ensemble::uniform_phase) {
        out.h(r, c) = std::polar(1.0, rng.phase());
      } else {
        // Box-Muller; each component has variance 1/2.
        const double u = 1.0 - rng.uniform();
        const double radius = std::sqrt(-std::log(u));
        out.h(r, c) = std::polar(radius, rng.phase());
      }
    }
  }
  return out;
}

double c_of_x(double x) {
  if (!(x >= 0.0)) throw InvalidParameter("c_of_x needs x >= 0");
  if (std::isinf(x)) return kInf;
  if (x < 1e-12) return std::numbers::log2e * (x - x * x);
  // r - 1 = 4x/(1+r) avoids cancellation for small x.
  const double r = std::sqrt(1.0 + 4.0 * x);
  const double u = 2.0 * x / (1.0 + r);
  return std::numbers::log2e * (2.0 * std::log1p(u) - 4.0 * x / ((1.0 + r) * (1.0 + r)));
}

double f_func(double x, double z) {
  if (!(x >= 0.0) || !(z >= 0.0)) throw InvalidParameter("f_func needs x, z >= 0");
  const double sz = std::sqrt(z);
  const double a = std::sqrt(x * (1.0 + sz) * (1.0 + sz) + 1.0);
  const double b = std::sqrt(x * (1.0 - sz) * (1.0 - sz) + 1.0);
  // a - b = 4 x sqrt(z) / (a + b)
  const double d = 4.0 * x * sz / (a + b);
  return d * d;
}

double c_of_beta(double snr, double beta) {
  if (!(snr >= 0.0)) throw InvalidParameter("c_of_beta needs snr >= 0");
  if (!(beta >= 0.0 && beta <= 1.0)) throw InvalidParameter("beta must lie in [0, 1]");
  if (beta == 0.0 || snr == 0.0) return 0.0;
  if (beta == 1.0) return c_of_x(snr);
  const double f = f_func(snr, beta);
  return beta * std::log2(1.0 + snr - f / 4.0) + std::log2(1.0 + snr * beta - f / 4.0) -
         std::numbers::log2e * f / (4.0 * snr);
}

double cutset_rate_asymptotic(const QmfChannelSpec& spec) {
  spec.validate();
  return std::min(spec.r0, c_of_x(spec.snr / spec.n0));
}

QmfBranches qmf_branches_asymptotic(const QmfChannelSpec& spec, double sigma_q2) {
  spec.validate();
  if (!(sigma_q2 > 0.0)) throw InvalidParameter("quantization level must be positive");
  return {spec.r0 - std::log2(1.0 + spec.n0 / sigma_q2), c_of_x(spec.snr / (spec.n0 + sigma_q2))};
}

double qmf_rate_asymptotic(const QmfChannelSpec& spec, double sigma_q2) {
  return qmf_branches_asymptotic(spec, sigma_q2).rate();
}

double qf_rate_asymptotic(const QmfChannelSpec& spec) {
  spec.validate();
  if (spec.r0 == 0.0) return 0.0;
  // (2^R0 - 1) SNR / (2^R0 N0 + SNR), rewritten with 2^-R0 so that R0 = inf works.
  const double inv = std::exp2(-spec.r0);
  return c_of_x((1.0 - inv) * spec.snr / (spec.n0 + spec.snr * inv));
}

QuantizationResult optimal_quantization(const QmfChannelSpec& spec, double tol) {
  spec.validate();
  if (!(tol >= 0.0)) throw InvalidParameter("tolerance must be non-negative");
  QuantizationResult out;
  if (spec.r0 == 0.0) {
    out.degenerate = true;
    out.level.sigma_q2 = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  if (std::isinf(spec.r0)) {
    out.level.sigma_q2 = 0.0;
    out.branches = {kInf, c_of_x(spec.snr / spec.n0)};
    out.rate = out.branches.mimo;
    return out;
  }

  double lo = spec.sigma_min2();
  double hi = spec.sigma_max2();
  auto gap = [&](double s2) {
    const QmfBranches b = qmf_branches_asymptotic(spec, s2);
    return b.backhaul - b.mimo;
  };
  // Invariant: gap(lo) <= 0 <= gap(hi). The result is the upper end, where the rate is the
  // MIMO branch at a level no larger than the QF level, so it never falls below QF.
  int it = 0;
  for (; it < kBisectionMaxIterations; ++it) {
    if (gap(hi) < tol) break;
    const double mid = std::sqrt(lo * hi);
    if (!(mid > lo && mid < hi)) break;
    (gap(mid) < 0.0 ? lo : hi) = mid;
  }
  const double mid = hi;

  out.level.sigma_q2 = mid;
  out.branches = qmf_branches_asymptotic(spec, mid);
  // The QF level is itself a candidate; its closed form can round one ulp above the branch value.
  out.rate = std::max(out.branches.rate(), qf_rate_asymptotic(spec));
  out.iterations = it;
  return out;
}

double qmf_rate_finite(const FiniteChannelMatrix& h, double r0, double n0, double snr,
                       std::span<const double> sigma2) {
  require_finite_size(h);
  require_channel(r0, n0, snr);
  const int m = h.size();
  if (m > kMaxEnumerationAntennas)
    throw SizeError("exhaustive subset enumeration supports m <= 20, got " + std::to_string(m));
  if (static_cast<int>(sigma2.size()) != m) throw InvalidParameter("need one quantization level per receiver");
  for (double s : sigma2)
    if (!(s > 0.0)) throw InvalidParameter("quantization levels must be positive");

  const Eigen::MatrixXcd g = gram(h);
  std::vector<double> penalty(m), weight(m);
  for (int i = 0; i < m; ++i) {
    penalty[i] = r0 - std::log2(1.0 + n0 / sigma2[i]);
    weight[i] = snr / (n0 + sigma2[i]);
  }

  double best = kInf;
  std::vector<int> rows;
  rows.reserve(m);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    double value = 0.0;
    rows.clear();
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) value += penalty[i];
      else rows.push_back(i);
    }
    if (value >= best) continue;  // logdet term is non-negative
    value += weighted_logdet(g, rows, weight);
    best = std::min(best, value);
  }
  return best / m;
}

double cutset_rate_finite(const FiniteChannelMatrix& h, double r0, double n0, double snr) {
  require_finite_size(h);
  require_channel(r0, n0, snr);
  const int m = h.size();
  if (m > kMaxEnumerationAntennas)
    throw SizeError("exhaustive subset enumeration supports m <= 20, got " + std::to_string(m));
  const Eigen::MatrixXcd g = gram(h);
  const std::vector<double> weight(m, snr / n0);
  double best = kInf;
  std::vector<int> rows;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const int cut = std::popcount(mask);
    if (cut > 0 && std::isinf(r0)) continue;
    double value = cut * r0;
    if (value >= best) continue;
    rows.clear();
    for (int i = 0; i < m; ++i)
      if (!(mask & (1u << i))) rows.push_back(i);
    value += weighted_logdet(g, rows, weight);
    best = std::min(best, value);
  }
  return best / m;
}

double qf_rate_finite(const FiniteChannelMatrix& h, double r0, double n0, double snr) {
  require_finite_size(h);
  require_channel(r0, n0, snr);
  if (r0 == 0.0) return 0.0;
  const int m = h.size();
  if (m > 256) throw SizeError("qf_rate_finite supports m <= 256");
  const double levels = backhaul_levels(r0);
  std::vector<double> weight(m);
  for (int i = 0; i < m; ++i) {
    const double row_power = h.h.row(i).squaredNorm();
    const double sigma2 = std::isinf(levels) ? 0.0 : (n0 + snr / m * row_power) / levels;
    weight[i] = snr / (n0 + sigma2);
  }
  std::vector<int> rows(m);
  std::iota(rows.begin(), rows.end(), 0);
  return weighted_logdet(gram(h), rows, weight) / m;
}

double logdet_rows(const FiniteChannelMatrix& h, double snr, std::span<const int> rows) {
  require_finite_size(h);
  const std::vector<double> weight(h.size(), snr);
  return weighted_logdet(gram(h), rows, weight);
}

MonteCarloEstimate logdet_montecarlo(int m, double snr, Ensemble ensemble, int trials, std::uint64_t seed,
                                     double row_fraction) {
  if (m < 1) throw InvalidParameter("matrix size must be positive");
  if (trials < 1) throw InvalidParameter("need at least one trial");
  if (!(snr >= 0.0)) throw InvalidParameter("snr must be non-negative");
  if (!(row_fraction >= 0.0 && row_fraction <= 1.0)) throw InvalidParameter("row fraction must lie in [0, 1]");
  const auto kept = static_cast<Eigen::Index>(std::lround(row_fraction * m));

  const std::vector<double> samples = parallel_map(static_cast<std::size_t>(trials), [&](std::size_t k) {
    const FiniteChannelMatrix h = FiniteChannelMatrix::draw(m, ensemble, seed, k);
    const Eigen::MatrixXcd sub = h.h.topRows(kept);
    Eigen::MatrixXcd a = (snr / m) * (sub * sub.adjoint());
    a.diagonal().array() += 1.0;
    return logdet2(a) / m;
  });

  MonteCarloEstimate est;
  est.trials = trials;
  est.seed = seed;
  est.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / trials;
  double ss = 0.0;
  for (double s : samples) ss += (s - est.mean) * (s - est.mean);
  est.stddev = trials > 1 ? std::sqrt(ss / (trials - 1)) : 0.0;
  return est;
}

SubmodularityReport submodularity_check(const FiniteChannelMatrix& h, double snr, int trials, std::uint64_t seed,
                                        double tol) {
  require_finite_size(h);
  const int m = h.size();
  if (m > 12) throw SizeError("submodularity_check supports m <= 12");
  if (trials < 1) throw InvalidParameter("need at least one trial");

  const Eigen::MatrixXcd g = gram(h);
  const std::vector<double> weight(m, snr);
  auto f = [&](const std::vector<int>& rows) { return weighted_logdet(g, rows, weight); };

  SubmodularityReport report;
  report.trials = trials;
  report.worst_violation = -kInf;
  for (int t = 0; t < trials; ++t) {
    CounterRng rng(seed, static_cast<std::uint64_t>(t));
    const int x = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
    std::vector<int> a, b;
    for (int i = 0; i < m; ++i) {
      if (i == x) continue;
      switch (rng.below(3)) {
        case 0: a.push_back(i); b.push_back(i); break;
        case 1: b.push_back(i); break;
        default: break;
      }
    }
    auto with_x = [x](std::vector<int> s) {
      s.insert(std::upper_bound(s.begin(), s.end(), x), x);
      return s;
    };
    const double gain_a = f(with_x(a)) - f(a);
    const double gain_b = f(with_x(b)) - f(b);
    const double violation = gain_b - gain_a;
    report.worst_violation = std::max(report.worst_violation, violation);
    if (violation > tol) report.passed = false;
  }
  return report;
}

}  // namespace ratekit
