#include "ratekit/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "ratekit/coding_rate.hpp"
#include "ratekit/core_model.hpp"
#include "ratekit/error.hpp"
#include "ratekit/mimo_rate.hpp"
#include "ratekit/multihop.hpp"
#include "ratekit/parallel.hpp"

#ifndef RATEKIT_VERSION
#define RATEKIT_VERSION "0.0.0"
#endif

namespace ratekit {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw InvalidParameter(fmt::format("not a number: '{}'", s));
  return v;
}

std::vector<double> logspace(double lo, double hi, int count) {
  return GridSpec{lo, hi, count, true}.values();
}

std::vector<std::int64_t> rounded_unique(const std::vector<double>& xs) {
  std::vector<std::int64_t> out;
  for (double x : xs) {
    const auto v = static_cast<std::int64_t>(std::llround(x));
    if (out.empty() || out.back() != v) out.push_back(v);
  }
  return out;
}

std::string join_sizes(const std::vector<double>& sizes) {
  std::string s;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) s += ';';
    s += format_number(sizes[i]);
  }
  return s;
}

std::string_view index_name(CodingRateIndex i) { return i == CodingRateIndex::stage_count_plus_one ? "t+1" : "t"; }

template <class T>
std::string opt_text(const std::optional<T>& v) {
  if (!v) return "auto";
  if constexpr (std::is_floating_point_v<T>)
    return format_number(*v);
  else
    return std::to_string(*v);
}

SchemeConfig scheme_config(const RunConfig& c, Method m, std::int64_t n) {
  SchemeConfig s;
  s.n = n;
  s.alpha = c.alpha;
  s.method = m;
  s.t = c.t;
  s.q = c.q;
  s.t_max = c.t_max;
  s.relay = c.relay;
  s.constants = c.constants;
  s.rate_index = c.rate_index;
  s.overrides = {c.snr, c.reuse, c.cluster_size};
  return s;
}

const std::vector<std::string> kBreakdownColumns{"method", "n",  "alpha", "relay", "coding_rate", "throughput",
                                                 "sum_rate", "t", "q",     "L",     "snr",         "p_i",
                                                 "cluster_sizes", "status"};

std::vector<std::string> breakdown_row(const SchemeConfig& s) {
  std::vector<std::string> row{std::string(to_string(s.method)), std::to_string(s.n), format_number(s.alpha)};
  try {
    const RateBreakdown r = compute_scheme(s);
    row.insert(row.end(), {std::string(to_string(r.relay)), format_number(r.coding_rate),
                           format_number(r.packet_throughput), format_number(r.sum_rate), std::to_string(r.t_used),
                           std::to_string(r.q_used), std::to_string(r.reuse), format_number(r.snr),
                           format_number(r.p_i), join_sizes(r.cluster_sizes), "ok"});
  } catch (const InfeasibleConfiguration&) {
    row.insert(row.end(), {std::string(to_string(s.relay)), "NaN", "NaN", "NaN", "", "", "", "NaN", "NaN", "",
                           "infeasible"});
  }
  return row;
}

// Sum rate or NaN when infeasible.
template <class Fn>
double rate_or_nan(Fn fn) {
  try {
    return fn().sum_rate;
  } catch (const InfeasibleConfiguration&) {
    return kNaN;
  }
}

Table numeric_table(std::vector<std::string> columns, const std::vector<std::vector<double>>& rows) {
  Table t;
  t.columns = std::move(columns);
  for (const auto& r : rows) {
    std::vector<std::string> cells;
    for (double v : r) cells.push_back(format_number(v));
    t.rows.push_back(std::move(cells));
  }
  return t;
}

// ---- figures ----

Table figure_reuse(double alpha, const std::vector<double>& snr_db) {
  const std::int64_t n = 10'000;
  const double snr_opt = optimal_snr_single_stage(alpha);
  std::vector<std::string> cols{"L", "tin_holds_at_snr_opt", "sum_rate_snr_opt"};
  for (double db : snr_db) cols.push_back(fmt::format("sum_rate_snr_{}db", db));
  std::vector<int> ls;
  for (int l = 2; l <= 12; ++l) ls.push_back(l);
  const auto rows = parallel_map(ls.size(), [&](std::size_t i) {
    const int l = ls[i];
    std::vector<double> row{static_cast<double>(l), tin_condition_holds(snr_opt, l, alpha).holds ? 1.0 : 0.0,
                            rate_or_nan([&] { return single_stage_sum_rate(n, alpha, snr_opt, l); })};
    for (double db : snr_db)
      row.push_back(rate_or_nan([&] { return single_stage_sum_rate(n, alpha, std::pow(10.0, db / 10.0), l); }));
    return row;
  });
  return numeric_table(std::move(cols), rows);
}

Table figure_stage_count(const RunConfig& c) {
  const double alpha = 7.0;
  const std::vector<std::int64_t> ns = rounded_unique(logspace(1e2, 1e7, 21));
  const int l = reuse_factor(optimal_snr_single_stage(alpha), alpha);
  const auto rows = parallel_map(ns.size(), [&](std::size_t i) {
    const std::int64_t n = ns[i];
    const StageCountEstimate e = optimal_stage_count_method2(static_cast<double>(n), l);
    std::vector<double> row{static_cast<double>(n), e.t_real, static_cast<double>(e.t_integer)};
    SearchOptions o;
    o.relay = c.relay;
    o.constants = c.constants;
    o.rate_index = c.rate_index;
    o.t_max = 12;
    for (Method m : {Method::m1, Method::m2, Method::m3, Method::m4})
      row.push_back(optimal_stage_count_search(m, n, alpha, 2, o).t);
    return row;
  });
  return numeric_table({"n", "t_closed_form", "t_closed_form_integer", "t_search_m1", "t_search_m2", "t_search_m3",
                        "t_search_m4"},
                       rows);
}

Table figure_chain() {
  const double alpha = 3.0;
  const int t_max = 10;
  const OperatingPoint op = OperatingPoint::hierarchical(alpha);
  std::vector<std::vector<double>> cols;
  for (RelayScheme s : {RelayScheme::qmf_optimal, RelayScheme::qf})
    for (int q = 1; q <= 3; ++q) cols.push_back(rate_sequence(op, q, s, t_max).rates);
  std::vector<std::vector<double>> rows;
  for (int t = 1; t <= t_max; ++t) {
    std::vector<double> row{static_cast<double>(t)};
    for (const auto& col : cols) row.push_back(col[static_cast<std::size_t>(t - 1)]);
    rows.push_back(std::move(row));
  }
  return numeric_table({"t", "qmf_q1", "qmf_q2", "qmf_q3", "qf_q1", "qf_q2", "qf_q3"}, rows);
}

Table figure_coding_rate() {
  std::vector<double> alphas;
  for (int k = 0; k <= 32; ++k) alphas.push_back(3.0 + 0.25 * k);
  const auto rows = parallel_map(alphas.size(), [&](std::size_t i) {
    const OperatingPoint op = OperatingPoint::hierarchical(alphas[i]);
    return std::vector<double>{alphas[i], op.snr, static_cast<double>(op.reuse), op.local_rate(),
                               rate_fixed_point(op, 2, RelayScheme::qmf_optimal),
                               rate_fixed_point(op, 2, RelayScheme::qf)};
  });
  return numeric_table({"alpha", "snr", "L", "local_rate", "rc_qmf", "rc_qf"}, rows);
}

Table figure_comparison(double alpha, const RunConfig& c) {
  const std::vector<std::int64_t> ns = comparison_n_grid();
  const auto rows = parallel_map(ns.size(), [&](std::size_t i) {
    const std::int64_t n = ns[i];
    SearchOptions o;
    o.t_max = c.t_max;
    o.constants = c.constants;
    o.rate_index = c.rate_index;
    std::vector<double> row{static_cast<double>(n)};
    for (Method m : {Method::m1, Method::m2, Method::m3, Method::m4})
      row.push_back(rate_or_nan([&] { return best_sum_rate(m, n, alpha, o); }));
    o.relay = RelayScheme::qf;
    row.push_back(rate_or_nan([&] { return best_sum_rate(Method::m4, n, alpha, o); }));
    row.push_back(rate_or_nan([&] { return original_hc_baseline(n, alpha, c.rate_index); }));
    row.push_back(multihop_sum_rate_lower(n, alpha).sum_rate);
    row.push_back(multihop_sum_rate_avg(n, alpha).sum_rate);
    return row;
  });
  return numeric_table({"n", "m1", "m2", "m3", "m4", "m4_qf", "original_hc", "multihop_lower", "multihop_avg"},
                       rows);
}

// ---- verification ----

struct CheckList {
  Table table{{"check", "value", "threshold", "passed"}, {}};
  bool passed = true;

  void add(std::string name, double value, double threshold, bool ok) {
    table.rows.push_back({std::move(name), format_number(value), format_number(threshold), ok ? "1" : "0"});
    passed = passed && ok;
  }
};

void verify_rmt(CheckList& out, std::uint64_t seed) {
  for (Ensemble e : {Ensemble::uniform_phase, Ensemble::complex_gaussian}) {
    for (double x : {1.0, 10.0, 100.0}) {
      const MonteCarloEstimate est = logdet_montecarlo(256, x, e, 100, seed);
      const double rel = std::abs(est.mean - c_of_x(x)) / c_of_x(x);
      out.add(fmt::format("logdet_m256_{}_x{}", e == Ensemble::uniform_phase ? "phase" : "gaussian", x), rel, 0.02,
              rel <= 0.02);
    }
  }
}

void verify_submodular(CheckList& out, std::uint64_t seed) {
  for (double snr : {1.0, 10.0, 100.0}) {
    for (std::uint64_t k = 0; k < 3; ++k) {
      const FiniteChannelMatrix h = FiniteChannelMatrix::draw(8, Ensemble::complex_gaussian, seed, k);
      const SubmodularityReport r = submodularity_check(h, snr, 500, seed + k);
      out.add(fmt::format("submodular_m8_snr{}_draw{}", snr, k), r.worst_violation, 1e-9, r.passed);
    }
  }
}

void verify_concavity(CheckList& out) {
  for (double snr : {0.1, 1.0, 10.0, 100.0, 1e4}) {
    std::vector<double> g;
    for (int k = 0; k < 100; ++k) g.push_back(c_of_beta(snr, k / 99.0));
    double worst = -1e300;
    for (std::size_t k = 1; k + 1 < g.size(); ++k) worst = std::max(worst, g[k + 1] - 2.0 * g[k] + g[k - 1]);
    out.add(fmt::format("c_beta_second_difference_snr{}", snr), worst, 1e-12, worst <= 1e-12);
    double excess = -1e300;
    for (int k = 1; k < 100; ++k) {
      const double b = k / 99.0;
      excess = std::max(excess, g[static_cast<std::size_t>(k)] - b * std::log2(1.0 + snr / b));
    }
    out.add(fmt::format("c_beta_below_beta_log_snr{}", snr), excess, 1e-12, excess <= 1e-12);
  }
}

void verify_pi_bound(CheckList& out) {
  const GridNetwork grid(3600);
  const double snr = 1e4;
  double worst = -1e300;
  for (double alpha : {2.5, 3.0, 4.0, 5.0, 7.0})
    for (int l = 2; l <= 6; ++l)
      for (std::int64_t cs : {1, 2, 3, 4, 5, 6}) {
        const double exact = interference_power_exact(grid, l, alpha, snr, cs).p_i;
        const double bound = interference_power_bound(grid.node_count(), snr, l, alpha).p_i;
        worst = std::max(worst, exact / bound);
      }
  out.add("exact_over_ring_bound_max", worst, 1.0, worst <= 1.0);
  for (double alpha : {5.0, 6.0, 7.0, 9.0, 11.0}) {
    const double s = optimal_snr_single_stage(alpha);
    const int l = reuse_factor(s, alpha);
    const double ring = interference_power_bound(10'000, s, l, alpha).p_i;
    const double dom = interference_power_dominant(s, l, alpha).p_i;
    const double rel = std::abs(ring - dom) / ring;
    out.add(fmt::format("single_ring_rel_gap_alpha{}", alpha), rel, 0.1, rel <= 0.1);
  }
}

void verify_traffic(CheckList& out, std::uint64_t seed) {
  const std::int64_t n = 4096;
  const RoutingTrafficStats s = relay_traffic_montecarlo(n, 100, seed);
  const double root = std::sqrt(static_cast<double>(n));
  const double rel = std::abs(s.mean_center - root) / root;
  out.add("center_mean_rel_error", rel, 0.05, rel <= 0.05);
  out.add("center_max", static_cast<double>(s.max_center), 2.0 * root, s.max_center <= 2.0 * root);
  out.add("any_node_max", static_cast<double>(s.max_node), 2.0 * root, s.max_node <= 2.0 * root);
}

void verify_ft_oracle(CheckList& out) {
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
    return std::abs(slot_budget_recursive(c.m, n, c.t, c.l, c.q).f_t - closed) / closed;
  });
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Case& c = cases[i];
    out.add(fmt::format("ft_{}_t{}_q{}_L{}", to_string(c.m), c.t, c.q, c.l), errs[i], 1e-6, errs[i] <= 1e-6);
  }
}

void verify_lemma1(CheckList& out) {
  for (int k = 0; k <= 17; ++k) {
    const double alpha = 2.5 + 0.5 * k;
    double worst = 1e300;
    for (int q = 1; q <= 16; ++q) {
      const Lemma1Report r = lemma1_bound_check(alpha, q);
      worst = std::min({worst, r.margin_qmf, r.margin_qf});
    }
    out.add(fmt::format("lemma1_min_margin_alpha{}", alpha), worst, 0.0, worst >= 0.0);
  }
}

void verify_ordering(CheckList& out, const RunConfig& c) {
  for (double alpha : {7.0, 4.0}) {
    const Table t = figure_comparison(alpha, c);
    for (const auto& row : t.rows) {
      const double m1 = parse_double(row[1]), m2 = parse_double(row[2]);
      const double m3 = parse_double(row[3]), m4 = parse_double(row[4]);
      const bool ok = m4 >= m2 && m2 >= m3 && m3 >= m1;
      out.add(fmt::format("m4>=m2>=m3>=m1_alpha{}_n{}", alpha, row[0]), m4 - m1, 0.0, ok);
    }
  }
}

}  // namespace

std::string_view tool_version() noexcept { return RATEKIT_VERSION; }

GridSpec GridSpec::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() < 3 || parts.size() > 4)
    throw InvalidParameter(fmt::format("grid '{}' must be lo:hi:count[:log]", text));
  GridSpec g;
  g.lo = parse_double(parts[0]);
  g.hi = parse_double(parts[1]);
  const double count = parse_double(parts[2]);
  if (count != std::floor(count) || count < 1 || count > 1e6)
    throw InvalidParameter(fmt::format("grid count '{}' must be an integer in [1, 1e6]", parts[2]));
  g.count = static_cast<int>(count);
  if (parts.size() == 4) {
    if (parts[3] != "log" && parts[3] != "lin") throw InvalidParameter("grid spacing must be 'log' or 'lin'");
    g.log = parts[3] == "log";
  }
  if (!std::isfinite(g.lo) || !std::isfinite(g.hi) || g.hi < g.lo)
    throw InvalidParameter(fmt::format("grid '{}' needs finite lo <= hi", text));
  if (g.log && !(g.lo > 0.0)) throw InvalidParameter("log grid needs lo > 0");
  return g;
}

std::vector<double> GridSpec::values() const {
  std::vector<double> v;
  for (int k = 0; k < count; ++k) {
    const double f = count == 1 ? 0.0 : static_cast<double>(k) / (count - 1);
    v.push_back(log ? std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo))) : lo + f * (hi - lo));
  }
  return v;
}

void RunConfig::validate() const {
  if (!(alpha > 2.0) || !std::isfinite(alpha)) throw InvalidParameter("alpha must be > 2");
  if (n_values.empty()) throw InvalidParameter("no n values given");
  for (auto n : n_values)
    if (n < 4) throw InvalidParameter(fmt::format("n = {} is below the minimum of 4", n));
  if (methods.empty()) throw InvalidParameter("no methods given");
  if (t && (*t < 1 || *t > 64)) throw InvalidParameter("t must lie in [1, 64]");
  if (q && (*q < 1 || *q > 64)) throw InvalidParameter("q must lie in [1, 64]");
  if (t_max < 1 || t_max > 64) throw InvalidParameter("tmax must lie in [1, 64]");
  if (reuse && (*reuse < 2 || *reuse > 1000)) throw InvalidParameter("L must lie in [2, 1000]");
  if (snr && !(*snr > 0.0 && *snr <= kDefaultSnrMax)) throw InvalidParameter("snr must lie in (0, 2^80]");
  if (cluster_size && !(*cluster_size >= 1.0)) throw InvalidParameter("cluster size must be >= 1");
}

std::string RunConfig::describe() const {
  std::string ns;
  for (std::size_t i = 0; i < n_values.size(); ++i) ns += (i ? "," : "") + std::to_string(n_values[i]);
  std::string ms;
  for (std::size_t i = 0; i < methods.size(); ++i) ms += fmt::format("{}{}", i ? "," : "", to_string(methods[i]));
  return fmt::format(
      "{}{}{} alpha={} n={} method={} t={} q={} tmax={} L={} snr={} M={} relay={} constants={} rate_index={} seed={}",
      command, target.empty() ? "" : " ", target, format_number(alpha), ns, ms, opt_text(t), opt_text(q), t_max,
      opt_text(reuse), opt_text(snr), opt_text(cluster_size), to_string(relay), to_string(constants),
      index_name(rate_index), seed);
}

std::string format_number(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "Inf" : "-Inf";
  return fmt::format("{:.12g}", v);
}

void write_csv(std::ostream& os, const Table& table, const RunConfig& config) {
  os << "# tool=ratekit " << tool_version() << '\n';
  os << "# constants=" << to_string(config.constants) << '\n';
  os << "# seed=" << config.seed << '\n';
  os << "# command=" << config.describe() << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << '\n';
  }
}

void write_pretty(std::ostream& os, const Table& table) {
  std::vector<std::size_t> width(table.columns.size(), 0);
  for (std::size_t i = 0; i < table.columns.size(); ++i) width[i] = table.columns[i].size();
  for (const auto& row : table.rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "  " : "") << fmt::format("{:>{}}", cells[i], width[i]);
    os << '\n';
  };
  line(table.columns);
  for (const auto& row : table.rows) line(row);
}

RateBreakdown compute_scheme(const SchemeConfig& c) {
  c.validate();
  switch (c.method) {
    case Method::single_stage:
      return single_stage_sum_rate(c.n, c.alpha, c.overrides.snr, c.overrides.reuse, c.q.value_or(1),
                                   c.overrides.cluster_size);
    case Method::multihop: return multihop_sum_rate_lower(c.n, c.alpha);
    case Method::multihop_avg: return multihop_sum_rate_avg(c.n, c.alpha);
    case Method::original_hc: return original_hc_baseline(c.n, c.alpha, c.rate_index);
    default: break;
  }
  SearchOptions o;
  o.relay = c.relay;
  o.constants = c.constants;
  o.rate_index = c.rate_index;
  o.t_max = c.t_max;
  o.reuse = c.overrides.reuse;
  o.snr = c.overrides.snr;
  o.t_fixed = c.t;
  o.q_fixed = c.q;
  return best_sum_rate(c.method, c.n, c.alpha, o);
}

std::vector<std::int64_t> comparison_n_grid() { return rounded_unique(logspace(1e2, 1e5, 13)); }

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"fig2", "fig3", "fig5", "fig7", "fig8", "fig9", "fig10"};
  return ids;
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> ids{"rmt",       "submodular", "concavity", "pi-bound",
                                            "traffic",   "ft-oracle",  "lemma1",    "ordering"};
  return ids;
}

const std::vector<std::string>& sweep_axes() {
  static const std::vector<std::string> ids{"n", "L", "snr", "alpha", "t", "q"};
  return ids;
}

Table cmd_compute(const RunConfig& config) {
  config.validate();
  std::vector<SchemeConfig> points;
  for (Method m : config.methods)
    for (std::int64_t n : config.n_values) points.push_back(scheme_config(config, m, n));
  Table t;
  t.columns = kBreakdownColumns;
  t.rows = parallel_map(points.size(), [&](std::size_t i) { return breakdown_row(points[i]); });
  if (std::none_of(t.rows.begin(), t.rows.end(), [](const auto& r) { return r.back() == "ok"; }))
    throw InfeasibleConfiguration("every requested configuration is infeasible");
  return t;
}

Table cmd_figure(const RunConfig& config) {
  config.validate();
  const std::string& id = config.target;
  if (id == "fig2") return figure_reuse(3.0, {20, 30, 40, 50, 60});
  if (id == "fig3") return figure_reuse(7.0, {40, 60, 80, 100});
  if (id == "fig5") return figure_stage_count(config);
  if (id == "fig7") return figure_chain();
  if (id == "fig8") return figure_coding_rate();
  if (id == "fig9") return figure_comparison(7.0, config);
  if (id == "fig10") return figure_comparison(4.0, config);
  throw InvalidParameter(fmt::format("unknown figure '{}'", id));
}

Table cmd_sweep(const RunConfig& config) {
  config.validate();
  const std::string& axis = config.target;
  GridSpec g;
  if (axis == "n") g = {1e2, 1e6, 21, true};
  else if (axis == "L") g = {2, 12, 11, false};
  else if (axis == "snr") g = {1e1, 1e12, 23, true};
  else if (axis == "alpha") g = {2.5, 11, 35, false};
  else if (axis == "t") g = {1, static_cast<double>(config.t_max), config.t_max, false};
  else if (axis == "q") g = {1, 4, 4, false};
  else throw InvalidParameter(fmt::format("unknown sweep axis '{}'", axis));
  if (config.grid) g = *config.grid;
  const bool integral = axis == "n" || axis == "L" || axis == "t" || axis == "q";
  std::vector<double> values = g.values();
  if (integral) {
    for (double& v : values) v = std::round(v);
    values.erase(std::unique(values.begin(), values.end()), values.end());
  }
  std::vector<SchemeConfig> points;
  std::vector<double> axis_values;
  for (double v : values) {
    for (Method m : config.methods) {
      SchemeConfig s = scheme_config(config, m, config.n_values.front());
      if (axis == "n") s.n = static_cast<std::int64_t>(v);
      else if (axis == "L") s.overrides.reuse = static_cast<int>(v);
      else if (axis == "snr") s.overrides.snr = v;
      else if (axis == "alpha") s.alpha = v;
      else if (axis == "t") s.t = static_cast<int>(v);
      else s.q = static_cast<int>(v);
      s.validate();
      points.push_back(s);
      axis_values.push_back(v);
    }
  }
  Table t;
  t.columns = kBreakdownColumns;
  t.columns.insert(t.columns.begin(), axis);
  t.rows = parallel_map(points.size(), [&](std::size_t i) {
    std::vector<std::string> row = breakdown_row(points[i]);
    row.insert(row.begin(), format_number(axis_values[i]));
    return row;
  });
  return t;
}

VerifyReport cmd_verify(const RunConfig& config) {
  config.validate();
  const std::string& s = config.target;
  CheckList out;
  if (s == "rmt") verify_rmt(out, config.seed);
  else if (s == "submodular") verify_submodular(out, config.seed);
  else if (s == "concavity") verify_concavity(out);
  else if (s == "pi-bound") verify_pi_bound(out);
  else if (s == "traffic") verify_traffic(out, config.seed);
  else if (s == "ft-oracle") verify_ft_oracle(out);
  else if (s == "lemma1") verify_lemma1(out);
  else if (s == "ordering") verify_ordering(out, config);
  else throw InvalidParameter(fmt::format("unknown verify suite '{}'", s));
  return {s, out.passed, std::move(out.table)};
}

}  // namespace ratekit
