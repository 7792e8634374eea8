#include <doctest.h>

#include <algorithm>
#include <clocale>
#include <limits>
#include <sstream>

#include "ratekit/error.hpp"
#include "ratekit/multihop.hpp"
#include "ratekit/report.hpp"

using namespace ratekit;

TEST_CASE("number formatting") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(678.82981842) == "678.82981842");
  CHECK(format_number(std::numeric_limits<double>::quiet_NaN()) == "NaN");
  CHECK(format_number(1e-20) == "1e-20");
  std::setlocale(LC_ALL, "de_DE.UTF-8");
  CHECK(format_number(0.25) == "0.25");
  std::setlocale(LC_ALL, "C");
}

TEST_CASE("grid spec parsing") {
  const GridSpec g = GridSpec::parse("1:100:3:log");
  CHECK(g.log);
  const auto v = g.values();
  REQUIRE(v.size() == 3);
  CHECK(v[1] == doctest::Approx(10.0));
  CHECK(GridSpec::parse("2:12:11").values().at(3) == doctest::Approx(5.0));
  CHECK_THROWS_AS(GridSpec::parse("1:2"), InvalidParameter);
  CHECK_THROWS_AS(GridSpec::parse("3:2:4"), InvalidParameter);
  CHECK_THROWS_AS(GridSpec::parse("0:2:4:log"), InvalidParameter);
  CHECK_THROWS_AS(GridSpec::parse("1:2:x"), InvalidParameter);
}

TEST_CASE("compute rows") {
  RunConfig c;
  c.methods = {Method::m4, Method::multihop};
  c.n_values = {10'000, 100'000};
  const Table t = cmd_compute(c);
  REQUIRE(t.rows.size() == 4);
  CHECK(t.rows[1][0] == "m4");
  CHECK(t.rows[1][6] == format_number(678.82981842));
  CHECK(t.rows[2][6] == format_number(multihop_sum_rate_lower(10'000, 7.0).sum_rate));

  RunConfig bad = c;
  bad.methods = {Method::single_stage};
  bad.n_values = {9};
  bad.reuse = 5;
  CHECK_THROWS_AS(cmd_compute(bad), InfeasibleConfiguration);
  bad.n_values = {9, 10'000};
  const Table mixed = cmd_compute(bad);
  CHECK(mixed.rows[0].back() == "infeasible");
  CHECK(mixed.rows[0][6] == "NaN");
  CHECK(mixed.rows[1].back() == "ok");
}

TEST_CASE("csv header and determinism") {
  RunConfig c;
  c.command = "figure";
  c.target = "fig9";
  c.constants = ConstantsVariant::theorem3;
  std::ostringstream a, b;
  write_csv(a, cmd_figure(c), c);
  write_csv(b, cmd_figure(c), c);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("# constants=theorem3\n") != std::string::npos);
  CHECK(a.str().find("# tool=ratekit ") == 0);
  CHECK(a.str().find("n,m1,m2,m3,m4,m4_qf,original_hc,multihop_lower,multihop_avg\n") != std::string::npos);
  CHECK(a.str().find('\r') == std::string::npos);
}

TEST_CASE("every figure builds") {
  for (const auto& id : figure_ids()) {
    RunConfig c;
    c.target = id;
    const Table t = cmd_figure(c);
    CAPTURE(id);
    CHECK(!t.rows.empty());
    for (const auto& row : t.rows) CHECK(row.size() == t.columns.size());
  }
  RunConfig c;
  c.target = "fig4";
  CHECK_THROWS_AS(cmd_figure(c), InvalidParameter);
}

TEST_CASE("sweeps") {
  RunConfig c;
  c.methods = {Method::single_stage};
  c.alpha = 3.0;
  c.target = "L";
  const Table t = cmd_sweep(c);
  REQUIRE(t.rows.size() == 11);
  // unimodal in L
  std::vector<double> rates;
  for (const auto& r : t.rows) rates.push_back(std::stod(r[7]));
  const auto peak = std::max_element(rates.begin(), rates.end()) - rates.begin();
  for (long k = 1; k <= peak; ++k) CHECK(rates[k] >= rates[k - 1]);
  for (std::size_t k = peak + 1; k < rates.size(); ++k) CHECK(rates[k] <= rates[k - 1]);

  // saturation in SNR at fixed L
  c.target = "snr";
  c.reuse = 7;
  c.grid = GridSpec::parse("1e6:1e14:9:log");
  const Table s = cmd_sweep(c);
  const double hi1 = std::stod(s.rows[7][7]);
  const double hi2 = std::stod(s.rows[8][7]);
  CHECK(hi2 >= hi1);
  CHECK((hi2 - hi1) / hi2 < 0.01);

  c.target = "depth";
  CHECK_THROWS_AS(cmd_sweep(c), InvalidParameter);
}

TEST_CASE("verify suites that run quickly") {
  for (std::string s : {"concavity", "pi-bound", "traffic", "lemma1", "ordering", "submodular", "ft-oracle"}) {
    RunConfig c;
    c.command = "verify";
    c.target = s;
    const VerifyReport r = cmd_verify(c);
    CAPTURE(s);
    CHECK(r.passed);
  }
  RunConfig c;
  c.target = "nope";
  CHECK_THROWS_AS(cmd_verify(c), InvalidParameter);
}
