#include "pqszasz/errors.hpp"
#include "pqszasz/experiments.hpp"
#include "pqszasz/moments.hpp"
#include "pqszasz/report.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

using namespace pqszasz;

namespace {

ExperimentSettings small_settings()
{
  ExperimentSettings s;
  s.grid = GridSpec(20.0, 400, 50);
  return s;
}

const SequenceParams kSeq(1.0, 0.5);

} // namespace

TEST_CASE("report rows are validated")
{
  ExperimentReport r;
  r.columns = {"a", "b"};
  r.add_row({1.0, 2.0});
  CHECK_THROWS_AS(r.add_row({1.0}), ValidationError);
  CHECK_THROWS_AS(r.add_row({1.0, NAN}), ValidationError);
  CHECK_THROWS_AS(r.add_row({INFINITY, 0.0}), ValidationError);
  CHECK(r.column("b") == 1);
  CHECK_THROWS_AS(r.column("c"), ValidationError);
  CHECK(r.column_values("b") == std::vector<double>{2.0});
  r.set_meta("k", "v");
  r.set_meta("k", 0.5);
  CHECK(r.meta("k") == "0.5");
  CHECK(r.meta("missing").empty());
}

TEST_CASE("number and field formatting")
{
  CHECK(format_real(0.1) == "0.1");
  CHECK(format_real(-0.0) == "0");
  CHECK(format_real(1e-300) == "1e-300");
  CHECK(std::stod(format_real(0.1 + 0.2)) == 0.1 + 0.2);
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("csv layout")
{
  ExperimentReport r;
  r.name = "demo";
  r.label_column = "label";
  r.columns = {"value"};
  r.set_meta("note", "x,y");
  r.add_labeled_row("first", {0.25});
  std::ostringstream os;
  write_csv(r, os);
  CHECK(os.str() == "# experiment=demo\n# note=x,y\nlabel,value\nfirst,0.25\n");

  std::ostringstream table;
  write_table(r, table);
  CHECK(table.str().find("first") != std::string::npos);
  CHECK(table.str().find("0.25") != std::string::npos);
}

TEST_CASE("korovkin errors equal the closed-form moment errors")
{
  const auto s = small_settings();
  const std::vector<std::size_t> ns{10, 100, 1000};
  const auto r = korovkin_report(kSeq, ns, s);
  REQUIRE(r.rows.size() == 3);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const auto pq = kSeq.at(ns[i]);
    const double N = pq_integer(ns[i], pq);
    double e1 = 0.0, e2 = 0.0;
    for (std::size_t j = 0; j <= s.grid.n_x(); ++j) {
      const double x = s.grid.x(j);
      const double w = 1.0 + x * x;
      e1 = std::max(e1, std::abs(central_moment_closed(1, ns[i], pq, x)) / w);
      e2 = std::max(e2, std::abs(moment_closed(2, ns[i], pq, x) - x * x) / w);
    }
    const auto& row = r.rows[i];
    CHECK(row[r.column("norm_e0")] <= 1e-10);
    CHECK(std::abs(row[r.column("norm_e1")] - e1) <= 1e-10);
    CHECK(std::abs(row[r.column("norm_e2")] - e2) <= 1e-10);
    CHECK(std::abs(e1 - (1.0 - pq.q()) / 2.0) <= 1e-12);
    CHECK(row[r.column("norm_e1")] <= row[r.column("bound_e1")] + 1e-6);
    CHECK(row[r.column("norm_e2")] <= row[r.column("bound_e2")] + 1e-6);
  }
  CHECK(r.rows[2][r.column("norm_e2")] < r.rows[1][r.column("norm_e2")]);
  CHECK(r.meta("n_x") == "400");
}

TEST_CASE("voronovskaya on e1 and e2 matches closed forms")
{
  const auto s = small_settings();
  const std::vector<double> xs{0.5, 1.0};
  const std::vector<std::size_t> ns{50, 100};
  for (const char* id : {"e1", "e2"}) {
    const auto r = voronovskaya_report(find_test_function(id), kSeq, ns, xs, s);
    for (const auto& row : r.rows) {
      const auto n = static_cast<std::size_t>(row[0]);
      const double x = row[1];
      const auto pq = kSeq.at(n);
      const double N = pq_integer(n, pq);
      const double m = std::string(id) == "e1" ? 1.0 : 2.0;
      const double want = N * (moment_closed(static_cast<std::size_t>(m), n, pq, x) - std::pow(x, m));
      CHECK(std::abs(row[r.column("scaled_error")] - want) <= 1e-10 * std::max(1.0, std::abs(want)));
    }
  }
  CHECK_THROWS_AS(voronovskaya_report(find_test_function("kink"), kSeq, ns, xs, s), ValidationError);
}

TEST_CASE("voronovskaya summary picks the half-corrected limit for x^2")
{
  const std::vector<double> xs{0.5, 1.0};
  const auto r = voronovskaya_report(find_test_function("e2"), kSeq, {250, 500, 1000, 2000}, xs);
  const auto verdicts = voronovskaya_summary(r);
  REQUIRE(verdicts.size() == 2);
  for (const auto& v : verdicts) {
    CHECK(v.half_variant);
    CHECK(v.relative_mismatch <= 0.05);
    REQUIRE(v.deviation_ratios.size() == 3);
    for (double ratio : v.deviation_ratios)
      CHECK(ratio <= 0.6);
  }
}

TEST_CASE("direct bound report")
{
  const auto s = small_settings();
  const std::vector<double> xs{0.0, 0.5, 1.0, 3.0};
  const PQParams pq(0.98, 0.95);
  for (const auto& tf : corpus_subset(FunctionClass::bounded)) {
    const auto r = direct_bound_report(tf, 50, pq, xs, s);
    CHECK(r.rows[0][r.column("error")] == 0.0);
    if (tf.id == "e0")
      for (const auto& row : r.rows)
        CHECK(row[r.column("error")] <= 1e-12);
    for (const auto& row : r.rows)
      CHECK(row[r.column("ratio")] <= 10.0);
  }
  CHECK_THROWS_AS(direct_bound_report(find_test_function("e2"), 50, pq, xs, s), ValidationError);
}

TEST_CASE("rate report")
{
  const auto s = small_settings();
  const std::vector<std::size_t> ns{10, 50, 250, 1000};
  const auto one = rate_report(find_test_function("e0"), 2.0, kSeq, ns, s);
  for (const auto& row : one.rows)
    CHECK(row[one.column("sup_error")] <= 1e-12);

  const auto r = rate_report(find_test_function("e2"), 2.0, kSeq, ns, s);
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    CHECK(r.rows[i][r.column("sup_error")] <= r.rows[i][r.column("bound")]);
    if (i > 0) {
      CHECK(r.rows[i][r.column("sup_error")] < r.rows[i - 1][r.column("sup_error")]);
      CHECK(r.rows[i][r.column("bound")] < r.rows[i - 1][r.column("bound")]);
    }
  }
  CHECK_THROWS_AS(rate_report(find_test_function("x3"), 2.0, kSeq, ns, s), ValidationError);
  CHECK_THROWS_AS(rate_report(find_test_function("e2"), 2.0, kSeq, {50, 10}, s), ValidationError);
}

TEST_CASE("weighted bound report")
{
  const auto s = small_settings();
  const auto r = weighted_bound_report(find_test_function("e2"), kSeq, {10, 50, 250}, s);
  for (const auto& row : r.rows) {
    CHECK(row[r.column("beta")] <= 1.0);
    CHECK(row[r.column("beta")] > 0.0);
    CHECK(row[r.column("ratio")] <= 10.0);
  }
  const auto zero = weighted_bound_report(find_test_function("e0"), kSeq, {10, 50}, s);
  for (const auto& row : zero.rows)
    CHECK(row[zero.column("weighted_error")] <= 1e-12);
}

TEST_CASE("scaled central moments")
{
  const std::vector<double> xs{0.0, 1.0};
  const std::vector<std::size_t> ns{100, 250, 500, 1000, 2000};
  const auto r = scaled_central_moments(kSeq, ns, xs);
  const double gamma = std::exp(-0.5) - std::exp(-1.0);
  double prev_mu4 = INFINITY;
  for (const auto& row : r.rows) {
    if (row[1] == 0.0) {
      CHECK(row[r.column("scaled_mu1")] == 0.0);
      CHECK(row[r.column("scaled_mu2")] == 0.0);
      CHECK(row[r.column("scaled_mu4")] == 0.0);
      continue;
    }
    const double mu4 = row[r.column("scaled_mu4")];
    CHECK(mu4 < prev_mu4);
    prev_mu4 = mu4;
    if (row[0] == 2000.0)
      CHECK(std::abs(row[r.column("scaled_mu2")] - (gamma + 1.0)) <= 0.05 * (gamma + 1.0));
  }
}

TEST_CASE("reports are deterministic")
{
  const auto s = small_settings();
  auto render = [&] {
    std::ostringstream os;
    write_csv(korovkin_report(kSeq, {10, 100}, s), os);
    return os.str();
  };
  CHECK(render() == render());
}
