#pragma once

// Front-end commands behind the CLI: compute, figure, sweep and verify, each producing a
// table that is written as CSV or as an aligned text table.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratekit/rate_breakdown.hpp"
#include "ratekit/schemes.hpp"

namespace ratekit {

std::string_view tool_version() noexcept;

enum class OutputFormat { csv, table };

// lo:hi:count[:log]
struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  int count = 1;
  bool log = false;

  static GridSpec parse(std::string_view text);
  std::vector<double> values() const;
};

struct RunConfig {
  std::string command = "compute";
  std::string target;  // figure id, verify suite or sweep axis
  double alpha = 7.0;
  std::vector<std::int64_t> n_values{10'000};
  std::vector<Method> methods{Method::m4};
  std::optional<int> t;
  std::optional<int> q;
  int t_max = 8;
  std::optional<int> reuse;
  std::optional<double> snr;
  std::optional<double> cluster_size;
  RelayScheme relay = RelayScheme::qmf_optimal;
  ConstantsVariant constants = ConstantsVariant::derivation;
  CodingRateIndex rate_index = CodingRateIndex::stage_count_plus_one;
  std::uint64_t seed = 1;
  std::optional<GridSpec> grid;
  OutputFormat format = OutputFormat::csv;
  std::string out;  // empty: stdout

  void validate() const;
  // Canonical one-line description, written into CSV headers.
  std::string describe() const;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

// 12 significant digits, "NaN" for NaN, "." decimal regardless of locale.
std::string format_number(double v);

void write_csv(std::ostream& os, const Table& table, const RunConfig& config);
void write_pretty(std::ostream& os, const Table& table);

// Evaluates one method at one n; hierarchical methods optimize the free (t, q).
RateBreakdown compute_scheme(const SchemeConfig& config);

// n in logspace(1e2, 1e5), four points per decade: the grid of the method comparison figures.
std::vector<std::int64_t> comparison_n_grid();

const std::vector<std::string>& figure_ids();
const std::vector<std::string>& verify_suites();
const std::vector<std::string>& sweep_axes();

// One row per (method, n). Infeasible rows carry NaN and status "infeasible"; throws
// InfeasibleConfiguration only when every row is infeasible.
Table cmd_compute(const RunConfig& config);
Table cmd_figure(const RunConfig& config);
Table cmd_sweep(const RunConfig& config);

struct VerifyReport {
  std::string suite;
  bool passed = true;
  Table table;  // check, value, threshold, passed
};

VerifyReport cmd_verify(const RunConfig& config);

}  // namespace ratekit
