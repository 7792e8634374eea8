#include "ratekit/coding_rate.hpp"

#include <cmath>
#include <string>

#include "ratekit/core_model.hpp"
#include "ratekit/error.hpp"
#include "ratekit/mimo_rate.hpp"

namespace ratekit {

std::string_view to_string(RelayScheme s) noexcept {
  return s == RelayScheme::qmf_optimal ? "qmf" : "qf";
}

OperatingPoint OperatingPoint::hierarchical(double alpha, std::optional<double> snr, std::optional<int> reuse,
                                            std::int64_t ring_nodes) {
  OperatingPoint op;
  op.alpha = alpha;
  op.snr = snr.value_or(optimal_snr_single_stage(alpha));
  op.reuse = reuse.value_or(reuse_factor(op.snr, alpha));
  op.p_i = interference_power_bound(ring_nodes, op.snr, op.reuse, alpha).p_i;
  return op;
}

double OperatingPoint::local_rate() const { return ratekit::local_rate(snr, p_i); }

double CodingRateSequence::at(int t) const {
  if (t < 1 || t > static_cast<int>(rates.size()))
    throw InvalidParameter("stage " + std::to_string(t) + " outside the computed sequence");
  return rates[static_cast<std::size_t>(t - 1)];
}

double relay_rate(const OperatingPoint& op, double backhaul, RelayScheme scheme) {
  const QmfChannelSpec spec{backhaul, 1.0 + op.p_i, op.snr, std::nullopt};
  if (scheme == RelayScheme::qf) return qf_rate_asymptotic(spec);
  // Full-precision bisection: the chain is checked for monotonicity at 1e-12.
  const QuantizationResult q = optimal_quantization(spec, 0.0);
  return q.degenerate ? 0.0 : q.rate;
}

CodingRateSequence rate_sequence(const OperatingPoint& op, int q, RelayScheme scheme, int t_max) {
  if (q < 1) throw InvalidParameter("time-expansion factor q must be >= 1");
  if (t_max < 1) throw InvalidParameter("t_max must be >= 1");
  CodingRateSequence seq;
  seq.alpha = op.alpha;
  seq.q = q;
  seq.relay_scheme = scheme;
  seq.rates.reserve(static_cast<std::size_t>(t_max));
  seq.rates.push_back(op.local_rate());
  while (static_cast<int>(seq.rates.size()) < t_max) {
    const double prev = seq.rates.back();
    if (prev <= 0.0) {
      seq.collapsed = true;
      seq.rates.push_back(0.0);
      continue;
    }
    seq.rates.push_back(relay_rate(op, q * prev, scheme));
  }
  seq.r_star = seq.rates.back();
  seq.converged = seq.rates.size() >= 2 && std::abs(seq.rates.back() - seq.rates[seq.rates.size() - 2]) < 1e-9;
  return seq;
}

CodingRateSequence rate_sequence(double alpha, int q, RelayScheme scheme, int t_max) {
  return rate_sequence(OperatingPoint::hierarchical(alpha), q, scheme, t_max);
}

double rate_fixed_point(const OperatingPoint& op, int q, RelayScheme scheme, double tol) {
  if (q < 1) throw InvalidParameter("time-expansion factor q must be >= 1");
  if (!(tol > 0.0)) throw InvalidParameter("fixed-point tolerance must be positive");
  double rate = op.local_rate();
  for (int it = 0; it < kFixedPointMaxIterations; ++it) {
    const double next = rate > 0.0 ? relay_rate(op, q * rate, scheme) : 0.0;
    if (std::abs(next - rate) < tol) return next;
    rate = next;
  }
  throw ConvergenceError("coding-rate recursion did not converge within " +
                             std::to_string(kFixedPointMaxIterations) + " iterations",
                         rate);
}

double rate_fixed_point(double alpha, int q, RelayScheme scheme, double tol) {
  return rate_fixed_point(OperatingPoint::hierarchical(alpha), q, scheme, tol);
}

double coding_rate_limit(double alpha) { return rate_fixed_point(alpha, 2, RelayScheme::qmf_optimal); }

Lemma1Report lemma1_bound_check(double alpha, int q) {
  if (q < 1) throw InvalidParameter("time-expansion factor q must be >= 1");
  const OperatingPoint op = OperatingPoint::hierarchical(alpha);
  Lemma1Report r;
  r.local = op.local_rate();
  r.margin_qmf = r.local - relay_rate(op, q * r.local, RelayScheme::qmf_optimal);
  r.margin_qf = r.local - relay_rate(op, q * r.local, RelayScheme::qf);
  r.passed = r.margin_qmf >= 0.0 && r.margin_qf >= 0.0;
  return r;
}

}  // namespace ratekit
