// Acceptance suite: one PASS/FAIL line per criterion, each with its runtime limit.
// Exit status is non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "ratekit/coding_rate.hpp"
#include "ratekit/core_model.hpp"
#include "ratekit/error.hpp"
#include "ratekit/mimo_rate.hpp"
#include "ratekit/multihop.hpp"
#include "ratekit/parallel.hpp"
#include "ratekit/report.hpp"
#include "ratekit/schemes.hpp"

using namespace ratekit;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      notes.push_back("failed: " + what);
    }
  }
};

std::vector<double> logspace(double lo, double hi, int count) { return GridSpec{lo, hi, count, true}.values(); }

double rel(double value, double target) { return std::abs(value - target) / std::abs(target); }

// 1. multihop range
Outcome multihop_range() {
  Outcome o;
  const double a = multihop_sum_rate_lower(10'000, 7.0).sum_rate;
  const double b = multihop_sum_rate_lower(100'000, 7.0).sum_rate;
  o.require(rel(a, 25.3) <= 0.02, fmt::format("n=1e4 gives {:.4f}, target 25.3 +-2%", a));
  o.require(rel(b, 79.9) <= 0.02, fmt::format("n=1e5 gives {:.4f}, target 79.9 +-2%", b));
  for (double n : logspace(1e4, 1e5, 21)) {
    const double r = multihop_sum_rate_lower(std::llround(n), 7.0).sum_rate;
    o.require(r >= 25.0 * 0.98 && r <= 80.0 * 1.02, fmt::format("n={:.0f} gives {:.3f}, outside 25..80", n, r));
  }
  o.detail = fmt::format("R(1e4)={:.3f} R(1e5)={:.3f}", a, b);
  return o;
}

// 2. headline hierarchical numbers
Outcome headline() {
  Outcome o;
  auto run = [](RelayScheme relay, ConstantsVariant v, CodingRateIndex index) {
    SearchOptions s;
    s.t_max = 8;
    s.relay = relay;
    s.constants = v;
    s.rate_index = index;
    return best_sum_rate(Method::m4, 100'000, 7.0, s);
  };
  const auto qmf = run(RelayScheme::qmf_optimal, ConstantsVariant::derivation, CodingRateIndex::stage_count_plus_one);
  const auto qf = run(RelayScheme::qf, ConstantsVariant::derivation, CodingRateIndex::stage_count_plus_one);
  o.require(rel(qmf.sum_rate, 680.0) <= 0.15, fmt::format("QMF {:.1f} vs 680 +-15%", qmf.sum_rate));
  o.require(rel(qf.sum_rate, 396.0) <= 0.15, fmt::format("QF {:.1f} vs 396 +-15%", qf.sum_rate));
  o.detail = fmt::format("qmf={:.1f} (t={}, q={}) qf={:.1f} (t={}, q={})", qmf.sum_rate, qmf.t_used, qmf.q_used,
                         qf.sum_rate, qf.t_used, qf.q_used);

  const auto t3_qmf = run(RelayScheme::qmf_optimal, ConstantsVariant::theorem3, CodingRateIndex::stage_count_plus_one);
  const auto t3_qf = run(RelayScheme::qf, ConstantsVariant::theorem3, CodingRateIndex::stage_count_plus_one);
  const double d_err = rel(qmf.sum_rate, 680.0) + rel(qf.sum_rate, 396.0);
  const double t_err = rel(t3_qmf.sum_rate, 680.0) + rel(t3_qf.sum_rate, 396.0);
  o.notes.push_back(fmt::format("theorem3 constants: qmf={:.1f} qf={:.1f}", t3_qmf.sum_rate, t3_qf.sum_rate));
  o.notes.push_back(fmt::format("closer variant: {} (summed relative error {:.3f} vs {:.3f})",
                                d_err <= t_err ? "derivation" : "theorem3", std::min(d_err, t_err),
                                std::max(d_err, t_err)));
  const auto lit_qmf = run(RelayScheme::qmf_optimal, ConstantsVariant::derivation, CodingRateIndex::stage_count);
  const auto lit_qf = run(RelayScheme::qf, ConstantsVariant::derivation, CodingRateIndex::stage_count);
  o.notes.push_back(fmt::format("coding rate R^(t) instead of R^(t+1): qmf={:.1f} qf={:.1f}", lit_qmf.sum_rate,
                                lit_qf.sum_rate));
  return o;
}

// 3. optimal stage count
Outcome stage_count() {
  Outcome o;
  const int l = reuse_factor(optimal_snr_single_stage(7.0), 7.0);
  std::string seen;
  for (double n : logspace(1e2, 1e7, 51)) {
    const StageCountEstimate e = optimal_stage_count_method2(n, l);
    o.require(e.t_integer <= 4, fmt::format("closed-form integer t={} at n={:.0f}", e.t_integer, n));
  }
  for (double n : {1e3, 1e4, 1e5, 1e6, 1e7}) {
    const int closed = optimal_stage_count_method2(n, l).t_integer;
    const int search = optimal_stage_count_search(Method::m2, std::llround(n), 7.0, 2).t;
    o.require(std::abs(closed - search) <= 1, fmt::format("n={:.0f}: closed {} vs search {}", n, closed, search));
    o.require(search <= 4, fmt::format("n={:.0f}: search t={}", n, search));
    seen += fmt::format("{}{}/{}", seen.empty() ? "" : " ", closed, search);
  }
  o.detail = fmt::format("closed/search for m2 at n=1e3..1e7: {}", seen);
  SearchOptions s;
  o.notes.push_back(fmt::format("m4 search with q=1 at n=1e7 (not part of the criterion): t={}",
                                optimal_stage_count_search(Method::m4, 10'000'000, 7.0, 1, s).t));
  return o;
}

// 4. method ordering on the comparison grids
Outcome ordering() {
  Outcome o;
  int points = 0;
  for (double alpha : {7.0, 4.0})
    for (std::int64_t n : comparison_n_grid()) {
      const double r1 = best_sum_rate(Method::m1, n, alpha).sum_rate;
      const double r2 = best_sum_rate(Method::m2, n, alpha).sum_rate;
      const double r3 = best_sum_rate(Method::m3, n, alpha).sum_rate;
      const double r4 = best_sum_rate(Method::m4, n, alpha).sum_rate;
      o.require(r4 >= r2 && r2 >= r3 && r3 >= r1,
                fmt::format("alpha={} n={}: {:.6g} {:.6g} {:.6g} {:.6g}", alpha, n, r4, r2, r3, r1));
      ++points;
    }
  o.detail = fmt::format("m4 >= m2 >= m3 >= m1 checked at {} grid points", points);
  return o;
}

// 5. optimized vs baseline
Outcome baseline() {
  Outcome o;
  double worst = 0.0;
  for (double alpha : {4.0, 7.0})
    for (double n : logspace(1e3, 1e5, 9)) {
      const auto nn = std::llround(n);
      const double ratio = original_hc_baseline(nn, alpha).sum_rate / multihop_sum_rate_lower(nn, alpha).sum_rate;
      worst = std::max(worst, ratio);
      o.require(ratio <= 1.5, fmt::format("alpha={} n={}: baseline/multihop = {:.3f}", alpha, nn, ratio));
    }
  const double gain = best_sum_rate(Method::m4, 100'000, 7.0).sum_rate / multihop_sum_rate_lower(100'000, 7.0).sum_rate;
  o.require(gain >= 4.0, fmt::format("m4/multihop at n=1e5 = {:.2f}", gain));
  o.detail = fmt::format("max baseline/multihop={:.3f}, m4/multihop(1e5)={:.2f}", worst, gain);
  return o;
}

// 6. random-matrix convergence
Outcome rmt() {
  Outcome o;
  double worst = 0.0;
  for (Ensemble e : {Ensemble::uniform_phase, Ensemble::complex_gaussian})
    for (double x : {1.0, 10.0, 100.0}) {
      const double err = rel(logdet_montecarlo(256, x, e, 100, 1).mean, c_of_x(x));
      worst = std::max(worst, err);
      o.require(err <= 0.02, fmt::format("x={} relative error {:.4f}", x, err));
    }
  o.detail = fmt::format("max relative error {:.2e} (M=256, 100 trials)", worst);
  return o;
}

// 7. quantization optimizer
Outcome quantization() {
  Outcome o;
  double worst_gap = 0.0;
  double worst_qf = -1e300;
  int points = 0;
  for (double r0 : logspace(1e-2, 20.0, 10))
    for (double n0 : logspace(1.0, 1e4, 10))
      for (double snr : logspace(1e-2, 1e10, 10)) {
        const QmfChannelSpec s{r0, n0, snr, std::nullopt};
        const auto lo = qmf_branches_asymptotic(s, s.sigma_min2());
        const auto hi = qmf_branches_asymptotic(s, s.sigma_max2());
        o.require(lo.backhaul - lo.mimo <= 0.0, fmt::format("f(sigma_min) > 0 at ({}, {}, {})", r0, n0, snr));
        o.require(hi.backhaul - hi.mimo >= 0.0, fmt::format("f(sigma_max) < 0 at ({}, {}, {})", r0, n0, snr));
        const QuantizationResult q = optimal_quantization(s);
        const double gap = std::abs(q.branches.backhaul - q.branches.mimo);
        worst_gap = std::max(worst_gap, gap);
        o.require(gap <= 1e-9, fmt::format("branch gap {:.3e} at ({}, {}, {})", gap, r0, n0, snr));
        const double qf = qf_rate_asymptotic(s);
        worst_qf = std::max(worst_qf, qf - q.rate);
        o.require(q.rate >= qf, fmt::format("QMF {:.17g} < QF {:.17g} at ({}, {}, {})", q.rate, qf, r0, n0, snr));
        ++points;
      }
  o.detail = fmt::format("{} points, max branch gap {:.2e}, max QF-QMF {:.2e}", points, worst_gap, worst_qf);
  return o;
}

// 8. coding-rate chain
Outcome chain() {
  Outcome o;
  double worst_rise = -1e300;
  for (int k = 0; k <= 34; ++k) {
    const double alpha = 2.5 + 0.25 * k;
    for (int q = 1; q <= 3; ++q)
      for (RelayScheme s : {RelayScheme::qmf_optimal, RelayScheme::qf}) {
        const auto seq = rate_sequence(alpha, q, s, 12);
        for (std::size_t t = 1; t < seq.rates.size(); ++t) {
          const double rise = seq.rates[t] - seq.rates[t - 1];
          worst_rise = std::max(worst_rise, rise);
          o.require(rise <= 1e-12, fmt::format("alpha={} q={} {} t={}: rise {:.3e}", alpha, q, to_string(s), t, rise));
        }
      }
  }
  double prev = 0.0;
  std::string limits;
  for (int alpha = 3; alpha <= 11; ++alpha) {
    const double rc = coding_rate_limit(alpha);
    o.require(rc > 0.0 && rc > prev, fmt::format("R*({},2)={:.4f} not above {:.4f}", alpha, rc, prev));
    limits += fmt::format("{}{:.2f}", limits.empty() ? "" : " ", rc);
    prev = rc;
  }
  double worst_conv = 0.0;
  for (int k = 0; k <= 16; ++k) {
    const double alpha = 3.0 + 0.5 * k;
    const double diff = std::abs(rate_sequence(alpha, 2, RelayScheme::qmf_optimal, 5).at(5) -
                                 rate_fixed_point(alpha, 2, RelayScheme::qmf_optimal));
    worst_conv = std::max(worst_conv, diff);
    o.require(diff <= 1e-3, fmt::format("alpha={}: |R^(5)-R*| = {:.2e}", alpha, diff));
  }
  o.detail = fmt::format("max rise {:.1e}; R*(3..11)= {}; max |R^(5)-R*| {:.1e}", worst_rise, limits, worst_conv);
  return o;
}

// 9. slot-budget oracle
Outcome slot_oracle() {
  Outcome o;
  struct Case {
    Method m;
    int t, q, l;
  };
  std::vector<Case> cases;
  for (Method m : {Method::m2, Method::m3, Method::m4})
    for (int t = 2; t <= 5; ++t)
      for (int q = 1; q <= 2; ++q)
        for (int l = 3; l <= 7; ++l) cases.push_back({m, t, q, l});
  const double n = 1e24;
  const auto errs = parallel_map(cases.size(), [&](std::size_t i) {
    const Case& c = cases[i];
    const double closed = slot_budget(c.m, n, c.t, c.l, c.q).f_t;
    return rel(slot_budget_recursive(c.m, n, c.t, c.l, c.q).f_t, closed);
  });
  double worst = 0.0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    worst = std::max(worst, errs[i]);
    o.require(errs[i] <= 1e-6, fmt::format("{} t={} q={} L={}: {:.2e}", to_string(cases[i].m), cases[i].t,
                                           cases[i].q, cases[i].l, errs[i]));
  }
  o.detail = fmt::format("{} cases at n=1e24, max relative error {:.2e}", cases.size(), worst);
  return o;
}

// 10. traffic oracle
Outcome traffic() {
  Outcome o;
  const RoutingTrafficStats s = relay_traffic_montecarlo(4096, 100, 1);
  for (std::size_t i = 0; i < s.center_per_trial.size(); ++i)
    o.require(s.center_per_trial[i] <= 128, fmt::format("trial {}: centre traffic {}", i, s.center_per_trial[i]));
  o.require(rel(s.mean_center, 64.0) <= 0.05, fmt::format("mean centre traffic {:.2f} vs 64", s.mean_center));
  const RoutingTrafficStats tiny = relay_traffic_montecarlo(4, 100, 1);
  o.require(tiny.max_center <= 4, "n=4 centre traffic above 4");
  o.detail = fmt::format("n=4096: mean {:.2f} (sqrt n = 64), max {} <= 128", s.mean_center, s.max_center);
  return o;
}

// 11. interference-bound dominance
Outcome interference() {
  Outcome o;
  int combos = 0;
  double worst_ratio = 0.0;
  for (std::int64_t n : {3600, 14400})
    for (double alpha : {2.5, 3.0, 4.0, 5.0, 7.0, 11.0})
      for (int l = 2; l <= 8; ++l)
        for (std::int64_t cs : {1, 2, 3, 4, 5, 6, 10}) {
          const GridNetwork grid(n);
          const double exact = interference_power_exact(grid, l, alpha, 1e4, cs).p_i;
          const double bound = interference_power_bound(n, 1e4, l, alpha).p_i;
          worst_ratio = std::max(worst_ratio, exact / bound);
          o.require(bound >= exact, fmt::format("n={} alpha={} L={} cluster={}: exact {:.6g} > bound {:.6g}", n, alpha,
                                                l, cs, exact, bound));
          ++combos;
        }
  double worst_single = 0.0;
  for (int k = 0; k <= 12; ++k) {
    const double alpha = 5.0 + 0.5 * k;
    const double snr = optimal_snr_single_stage(alpha);
    for (int l = 2; l <= 12; ++l) {
      const double ring = interference_power_bound(10'000, snr, l, alpha).p_i;
      const double gap = rel(interference_power_dominant(snr, l, alpha).p_i, ring);
      worst_single = std::max(worst_single, gap);
      o.require(gap <= 0.10, fmt::format("alpha={} L={}: single ring off by {:.3f}", alpha, l, gap));
    }
  }
  o.detail = fmt::format("{} combinations, max exact/bound {:.3f}; single-ring max gap {:.3f} for alpha >= 5", combos,
                         worst_ratio, worst_single);
  return o;
}

// 12. TIN design point
Outcome tin_point() {
  Outcome o;
  for (int k = 0; k <= 34; ++k) {
    const double alpha = 2.5 + 0.25 * k;
    for (int e = 0; e <= 24; ++e) {
      const double snr = std::pow(10.0, e / 2.0);
      const int l = reuse_factor(snr, alpha);
      o.require(tin_condition_holds(snr, l, alpha).holds, fmt::format("alpha={} snr={:g} L={}", alpha, snr, l));
      // L - 1 is the smallest integer strictly above snr^(1/(2 alpha)); L - 1 itself would not do
      o.require((l - 1.0) > std::pow(snr, 1.0 / (2.0 * alpha)) - 1e-9,
                fmt::format("alpha={} snr={:g}: L-1 not above the TIN threshold", alpha, snr));
    }
  }
  std::string frac;
  for (double alpha : {3.0, 7.0}) {
    const double chosen = single_stage_sum_rate(10'000, alpha).sum_rate;
    double best = 0.0;
    for (int l = 2; l <= 12; ++l)
      for (int k = 0; k <= 120; ++k) {
        try {
          best = std::max(best, single_stage_sum_rate(10'000, alpha, std::pow(10.0, k / 10.0), l).sum_rate);
        } catch (const InfeasibleConfiguration&) {
        }
      }
    o.require(chosen >= 0.95 * best, fmt::format("alpha={}: {:.3f} of grid max", alpha, chosen / best));
    frac += fmt::format("{}alpha={}: {:.3f}", frac.empty() ? "" : ", ", alpha, chosen / best);
  }
  o.detail = "TIN point / grid max: " + frac;
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "multihop range", 1.0, multihop_range},
      {2, "headline hierarchical sum rates", 10.0, headline},
      {3, "optimal stage count", 5.0, stage_count},
      {4, "method ordering", 30.0, ordering},
      {5, "optimized vs baseline", 30.0, baseline},
      {6, "random-matrix convergence", 60.0, rmt},
      {7, "quantization optimizer", 10.0, quantization},
      {8, "coding-rate chain", 10.0, chain},
      {9, "slot-budget oracle", 10.0, slot_oracle},
      {10, "traffic oracle", 30.0, traffic},
      {11, "interference-bound dominance", 5.0, interference},
      {12, "TIN design point", 10.0, tin_point},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) {
      o.passed = false;
      o.notes.push_back(fmt::format("runtime {:.2f} s over the {:.0f} s limit", secs, c.limit_s));
    }
    if (!o.passed) ++failed;
    std::printf("AC%-2d %s  %-30s %7.2fs  %s\n", c.id, o.passed ? "PASS" : "FAIL", c.name.c_str(), secs,
                o.detail.c_str());
    const std::size_t shown = std::min<std::size_t>(o.notes.size(), 8);
    for (std::size_t i = 0; i < shown; ++i) std::printf("       %s\n", o.notes[i].c_str());
    if (o.notes.size() > shown) std::printf("       ... %zu more\n", o.notes.size() - shown);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
