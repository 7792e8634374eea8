// ratekit: sum-rate calculator for hierarchical cooperation and multihop routing.
//
//   ratekit compute --method m4 --alpha 7 --n 1e5
//   ratekit figure fig9 --out fig9.csv
//   ratekit sweep L --method single --alpha 3 --n 1e4
//   ratekit verify lemma1
//
// Exit codes: 0 success, 1 verification failure, 2 invalid configuration.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ratekit/error.hpp"
#include "ratekit/report.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;

std::int64_t to_count(double v) {
  if (!std::isfinite(v) || v != std::floor(v) || v < 1 || v > 9e15)
    throw ratekit::InvalidParameter(fmt::format("n = {} is not a positive integer", v));
  return static_cast<std::int64_t>(v);
}

struct Options {
  std::vector<double> n{1e4};
  std::string n_range;
  std::vector<std::string> methods{"m4"};
  std::string relay = "qmf";
  std::string constants = "derivation";
  std::string rate_index = "t+1";
  std::string format = "csv";
  std::string grid;
  std::optional<int> t, q, reuse;
  std::optional<double> snr, cluster_size;
};

ratekit::RunConfig build_config(const Options& o, ratekit::RunConfig c) {
  if (!o.n_range.empty()) {
    const auto colons = std::count(o.n_range.begin(), o.n_range.end(), ':');
    const std::string spec = colons == 1 ? o.n_range + ":13:log" : colons == 2 ? o.n_range + ":log" : o.n_range;
    const ratekit::GridSpec g = ratekit::GridSpec::parse(spec);
    c.n_values.clear();
    for (double v : g.values()) {
      const auto n = static_cast<std::int64_t>(std::llround(v));
      if (c.n_values.empty() || c.n_values.back() != n) c.n_values.push_back(n);
    }
  } else {
    c.n_values.clear();
    for (double v : o.n) c.n_values.push_back(to_count(v));
  }
  c.methods.clear();
  for (const auto& m : o.methods) {
    const auto parsed = ratekit::parse_method(m);
    if (!parsed) throw ratekit::InvalidParameter(fmt::format("unknown method '{}'", m));
    c.methods.push_back(*parsed);
  }
  c.relay = o.relay == "qf" ? ratekit::RelayScheme::qf : ratekit::RelayScheme::qmf_optimal;
  c.constants = *ratekit::parse_constants(o.constants);
  c.rate_index = o.rate_index == "t" ? ratekit::CodingRateIndex::stage_count
                                     : ratekit::CodingRateIndex::stage_count_plus_one;
  c.format = o.format == "table" ? ratekit::OutputFormat::table : ratekit::OutputFormat::csv;
  if (!o.grid.empty()) c.grid = ratekit::GridSpec::parse(o.grid);
  c.t = o.t;
  c.q = o.q;
  c.reuse = o.reuse;
  c.snr = o.snr;
  c.cluster_size = o.cluster_size;
  c.validate();
  return c;
}

void emit(const ratekit::Table& table, const ratekit::RunConfig& c) {
  std::ofstream file;
  if (!c.out.empty()) {
    file.open(c.out, std::ios::binary);
    if (!file) throw ratekit::InvalidParameter(fmt::format("cannot open '{}' for writing", c.out));
  }
  std::ostream& os = c.out.empty() ? std::cout : file;
  if (c.format == ratekit::OutputFormat::csv)
    ratekit::write_csv(os, table, c);
  else
    ratekit::write_pretty(os, table);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sum-rate calculator for hierarchical cooperation and multihop routing"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value file mirroring the flags; command-line values win");
  app.set_version_flag("--version", std::string(ratekit::tool_version()));

  ratekit::RunConfig cfg;
  Options o;
  app.add_option("--alpha", cfg.alpha, "Pathloss exponent (> 2)")->capture_default_str();
  app.add_option("--n", o.n, "Number of nodes; comma-separated list allowed")->delimiter(',')->capture_default_str();
  app.add_option("--n-range", o.n_range, "Node counts lo:hi[:count[:log|lin]], log-spaced by default");
  app.add_option("--method", o.methods,
                 "single, m1, m2, m3, m4, multihop, multihop-avg, original-hc; comma-separated list allowed")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--t", o.t, "Fix the number of hierarchical stages (default: optimize)");
  app.add_option("--q", o.q, "Fix the time-expansion factor Q (default: optimize over 1, 2)");
  app.add_option("--tmax", cfg.t_max, "Largest stage count searched")->capture_default_str();
  app.add_option("--L", o.reuse, "Override the TDMA reuse factor");
  app.add_option("--snr", o.snr, "Override the per-link SNR (linear)");
  app.add_option("--M", o.cluster_size, "Fix the single-stage cluster size");
  app.add_option("--relay", o.relay, "Coding-rate chain relay scheme")
      ->check(CLI::IsMember({"qmf", "qf"}))
      ->capture_default_str();
  app.add_option("--constants", o.constants, "Throughput penalty constants")
      ->check(CLI::IsMember({"derivation", "theorem3"}))
      ->capture_default_str();
  app.add_option("--rate-index", o.rate_index, "Coding rate of a t-stage scheme: R^(t+1) or R^(t)")
      ->check(CLI::IsMember({"t+1", "t"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for Monte-Carlo suites")->capture_default_str();
  app.add_option("--out", cfg.out, "Output file (default: stdout)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "table"}))->capture_default_str();

  auto* compute = app.add_subcommand("compute", "Sum rate of each method at each n");
  compute->fallthrough();
  auto* figure = app.add_subcommand("figure", "Reproduce a figure's data as CSV");
  figure->fallthrough();
  figure->add_option("id", cfg.target, "Figure id")->required()->check(CLI::IsMember(ratekit::figure_ids()));
  auto* sweep = app.add_subcommand("sweep", "Sweep one parameter with the others fixed");
  sweep->fallthrough();
  sweep->add_option("axis", cfg.target, "Swept parameter")->required()->check(CLI::IsMember(ratekit::sweep_axes()));
  sweep->add_option("--grid", o.grid, "Grid lo:hi:count[:log|lin]");
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->fallthrough();
  verify->add_option("suite", cfg.target, "Suite name")->required()->check(CLI::IsMember(ratekit::verify_suites()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    ratekit::RunConfig c = build_config(o, cfg);
    if (compute->parsed()) {
      c.command = "compute";
      emit(ratekit::cmd_compute(c), c);
    } else if (figure->parsed()) {
      c.command = "figure";
      emit(ratekit::cmd_figure(c), c);
    } else if (sweep->parsed()) {
      c.command = "sweep";
      emit(ratekit::cmd_sweep(c), c);
    } else {
      c.command = "verify";
      const ratekit::VerifyReport r = ratekit::cmd_verify(c);
      emit(r.table, c);
      std::cerr << "verify " << r.suite << ": " << (r.passed ? "PASS" : "FAIL") << '\n';
      return r.passed ? 0 : kExitVerifyFailed;
    }
  } catch (const ratekit::InvalidParameter& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ratekit::InfeasibleConfiguration& e) {
    std::cerr << "infeasible configuration: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return 0;
}
