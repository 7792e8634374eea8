#include "ratekit/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ratekit/error.hpp"

namespace ratekit {
namespace {

void require_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha < 2.0)
    throw InvalidParameter("pathloss exponent must be finite and >= 2, got " + std::to_string(alpha));
}

void require_snr(double snr) {
  if (!std::isfinite(snr) || snr <= 0.0)
    throw InvalidParameter("snr must be finite and positive, got " + std::to_string(snr));
}

void require_reuse(int reuse) {
  if (reuse < 2) throw InvalidParameter("reuse factor must be >= 2, got " + std::to_string(reuse));
}

std::int64_t exact_isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

GridNetwork::GridNetwork(std::int64_t n) {
  if (n < 1) throw InvalidParameter("grid needs at least one node");
  side_ = exact_isqrt(n);
  if (side_ * side_ != n)
    throw InvalidParameter("grid node count must be a perfect square, got " + std::to_string(n));
}

std::pair<double, double> GridNetwork::position(std::int64_t i, std::int64_t j) const {
  if (i < 0 || j < 0 || i >= side_ || j >= side_) throw InvalidParameter("node index outside grid");
  return {static_cast<double>(i) * spacing(), static_cast<double>(j) * spacing()};
}

void PathlossChannel::validate() const { require_alpha(alpha); }

double PathlossChannel::gain_magnitude(double distance) const {
  validate();
  if (!(distance > 0.0)) throw InvalidParameter("distance must be positive");
  return std::pow(distance, -alpha / 2.0);
}

PowerPolicy PowerPolicy::uniform(double snr, double cluster_area) {
  PowerPolicy p;
  p.snr_local = snr;
  p.snr_mimo = snr;
  p.cluster_area = cluster_area;
  p.validate();
  return p;
}

void PowerPolicy::validate() const {
  require_snr(snr_local);
  require_snr(snr_mimo);
  if (!(snr_max > 0.0)) throw InvalidParameter("snr_max must be positive");
  if (snr_local > snr_max || snr_mimo > snr_max) throw InvalidParameter("snr exceeds snr_max");
  if (!(cluster_area > 0.0) || cluster_area > 1.0)
    throw InvalidParameter("cluster area must lie in (0, 1]");
}

double PowerPolicy::local_power(double alpha) const {
  validate();
  require_alpha(alpha);
  return snr_local * std::pow(cluster_area, alpha / 2.0);
}

double PowerPolicy::mimo_power(double alpha, double cluster_nodes) const {
  validate();
  require_alpha(alpha);
  if (!(cluster_nodes >= 1.0)) throw InvalidParameter("cluster must hold at least one node");
  return snr_mimo / cluster_nodes * std::pow(cluster_area, alpha / 2.0);
}

void TdmaConfig::validate() const { require_reuse(reuse); }

bool TdmaConfig::is_active(std::int64_t u, std::int64_t v, int slot_u, int slot_v) const noexcept {
  return u % reuse == slot_u && v % reuse == slot_v;
}

std::string_view to_string(InterferenceMethod m) noexcept {
  switch (m) {
    case InterferenceMethod::ring_bound: return "ring-bound";
    case InterferenceMethod::dominant: return "dominant";
    case InterferenceMethod::exact_grid: return "exact-grid";
  }
  return "unknown";
}

int reuse_factor(double snr, double alpha) {
  require_snr(snr);
  require_alpha(alpha);
  int l = static_cast<int>(std::ceil(std::pow(snr, 1.0 / (2.0 * alpha)) + 1.0));
  // pow can land just below an exact integer root; step up until the check agrees
  while (!tin_condition_holds(snr, l, alpha).holds) ++l;
  return l;
}

double optimal_snr_single_stage(double alpha) {
  require_alpha(alpha);
  return std::exp2(2.0 * (3.0 + alpha / std::numbers::ln2));
}

double optimal_snr_multihop(double alpha) {
  require_alpha(alpha);
  return std::exp2(2.0 * (3.0 + alpha / (2.0 * std::numbers::ln2)));
}

InterferenceBudget interference_power_bound(std::int64_t n, double snr, int reuse, double alpha) {
  if (n < 1) throw InvalidParameter("n must be >= 1");
  require_snr(snr);
  require_reuse(reuse);
  require_alpha(alpha);
  const std::int64_t rings = exact_isqrt(n);
  // Terms shrink like i^(1-alpha); accumulate from the far rings inwards.
  double total = 0.0;
  for (std::int64_t i = rings; i >= 1; --i) {
    const double dist = static_cast<double>(reuse) * static_cast<double>(i) - 1.0;
    total += 8.0 * static_cast<double>(i) * std::pow(dist, -alpha);
  }
  return {snr * total, InterferenceMethod::ring_bound};
}

InterferenceBudget interference_power_dominant(double snr, int reuse, double alpha) {
  require_snr(snr);
  require_reuse(reuse);
  require_alpha(alpha);
  return {8.0 * snr * std::pow(static_cast<double>(reuse) - 1.0, -alpha), InterferenceMethod::dominant};
}

InterferenceBudget interference_power_exact(const GridNetwork& grid, int reuse, double alpha,
                                            double snr, std::int64_t cluster_side) {
  require_snr(snr);
  require_reuse(reuse);
  require_alpha(alpha);
  const std::int64_t side = grid.side();
  if (cluster_side < 1 || cluster_side > side || side % cluster_side != 0)
    throw InvalidParameter("cluster side must divide the grid side");

  const std::int64_t clusters = side / cluster_side;
  const std::int64_t centre = side / 2;
  const std::int64_t home = centre / cluster_side;
  const double width = static_cast<double>(cluster_side) / static_cast<double>(side);

  // Closest coordinate of cluster c (in node units) to the receiver coordinate.
  auto nearest = [&](std::int64_t c) {
    const std::int64_t lo = c * cluster_side;
    return std::clamp(centre, lo, lo + cluster_side - 1);
  };

  double total = 0.0;
  for (std::int64_t u = home % reuse; u < clusters; u += reuse) {
    for (std::int64_t v = home % reuse; v < clusters; v += reuse) {
      if (u == home && v == home) continue;
      const double dx = static_cast<double>(nearest(u) - centre) * grid.spacing();
      const double dy = static_cast<double>(nearest(v) - centre) * grid.spacing();
      const double d = std::hypot(dx, dy);
      // snr * A^(alpha/2) * d^(-alpha) with A = width^2.
      total += std::pow(width / d, alpha);
    }
  }
  return {snr * total, InterferenceMethod::exact_grid};
}

double local_rate(double snr, double p_i) {
  require_snr(snr);
  if (!(p_i >= 0.0)) throw InvalidParameter("interference power must be non-negative");
  return std::log2(1.0 + snr / (1.0 + p_i));
}

TinCheck tin_condition_holds(double snr, int reuse, double alpha) {
  require_snr(snr);
  require_reuse(reuse);
  require_alpha(alpha);
  const double inr = std::pow(static_cast<double>(reuse) - 1.0, -alpha) * snr;
  const double threshold = std::sqrt(snr);
  return {inr <= threshold, 10.0 * std::log10(threshold / inr)};
}

}  // namespace ratekit
