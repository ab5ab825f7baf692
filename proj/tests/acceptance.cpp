// Acceptance suite: one PASS/FAIL line per criterion, each with its runtime
// budget. Exit status is nonzero when any criterion fails.
//
// usage: acceptance [path-to-pqszasz-binary]
// Without the path, criterion 12 drives the CLI in-process only.

#include "pqszasz/cli.hpp"
#include "pqszasz/experiments.hpp"
#include "pqszasz/moments.hpp"
#include "pqszasz/sequences.hpp"
#include "pqszasz/szasz_operator.hpp"
#include "pqszasz/test_functions.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace pqszasz;

namespace {

// Values at or below this are rounding residue of an exactly-zero quantity.
constexpr double kZeroFloor = 1e-12;

const std::vector<PQParams> kParams{{0.95, 0.9}, {0.9, 0.8}, {1.0, 0.7}};
const std::vector<std::size_t> kNs{1, 5, 10, 50};
const std::vector<double> kXs{0.0, 0.5, 1.0, 2.0};
const SequenceParams kSeq(1.0, 0.5);

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v)
{
  std::ostringstream os;
  os << std::setprecision(3) << v;
  return os.str();
}

double rel(double got, double want)
{
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

/// Strictly decreasing, where a value at the zero floor counts as settled.
bool decreasing(const std::vector<double>& v)
{
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] <= kZeroFloor && v[i - 1] <= kZeroFloor)
      continue;
    if (!(v[i] < v[i - 1]))
      return false;
  }
  return true;
}

template <typename Fn>
void for_grid(Fn&& fn)
{
  for (const auto& pq : kParams)
    for (std::size_t n : kNs)
      for (double x : kXs)
        fn(pq, n, x);
}

Outcome moment_oracle()
{
  const SeriesControl tight(1e-14, 10000);
  double worst = 0.0;
  for_grid([&](const PQParams& pq, std::size_t n, double x) {
    const auto basis = basis_weights(n, pq, x, tight);
    const auto rec = raw_moments_recurrence(6, n, pq, x);
    for (std::size_t m = 0; m <= 6; ++m) {
      const double md = static_cast<double>(m);
      const double brute = pqszasz::apply([md](double t) { return std::pow(t, md); }, basis);
      worst = std::max(worst, rel(rec[m], brute));
    }
  });
  return {worst <= 1e-9, "max rel err " + fmt(worst) + " (tol 1e-9)"};
}

Outcome closed_forms()
{
  double worst_raw = 0.0, worst_central = 0.0;
  for_grid([&](const PQParams& pq, std::size_t n, double x) {
    for (std::size_t m = 0; m <= 4; ++m)
      worst_raw = std::max(worst_raw, rel(moment_closed(m, n, pq, x), moment_recurrence(m, n, pq, x)));
    for (std::size_t r : {1u, 2u, 4u})
      worst_central =
          std::max(worst_central, rel(central_moment_closed(r, n, pq, x), central_moment_expand(r, n, pq, x)));
  });
  return {worst_raw <= 1e-12 && worst_central <= 1e-12,
          "raw " + fmt(worst_raw) + ", central " + fmt(worst_central) + " (tol 1e-12)"};
}

Outcome partition_of_unity()
{
  double worst = 0.0;
  for_grid([&](const PQParams& pq, std::size_t n, double x) {
    const auto b = basis_weights(n, pq, x);
    worst = std::max(worst, std::abs(std::accumulate(b.weights.begin(), b.weights.end(), 0.0) - 1.0));
  });
  return {worst <= 1e-12, "max |sum w - 1| " + fmt(worst) + " (tol 1e-12)"};
}

Outcome exactness_rows()
{
  double worst = 0.0;
  for_grid([&](const PQParams& pq, std::size_t n, double x) {
    const auto b = basis_weights(n, pq, x);
    worst = std::max(worst, rel(pqszasz::apply([](double) { return 1.0; }, b), 1.0));
    worst = std::max(worst, rel(pqszasz::apply([](double t) { return t; }, b), pq.q() * x));
  });
  return {worst <= 1e-12, "max rel err " + fmt(worst) + " (tol 1e-12)"};
}

Outcome second_moment_bound()
{
  double worst = -std::numeric_limits<double>::infinity();
  for_grid([&](const PQParams& pq, std::size_t n, double x) {
    const double bound = x * x * (1.0 - pq.p() * pq.q()) + x / pq_integer(n, pq);
    const double brute = pqszasz::apply([x](double t) { return (t - x) * (t - x); }, n, pq, x);
    const double closed = central_moment_closed(2, n, pq, x);
    worst = std::max({worst, brute - bound, closed - bound});
  });
  return {worst <= 1e-12, "max (mu2 - bound) " + fmt(worst) + " (slack 1e-12)"};
}

Outcome sequence_limits()
{
  const auto at = limit_terms_at(kSeq, 10000);
  const double a_err = std::abs(at.a - std::exp(-1.0)) / std::exp(-1.0);
  const double b_err = std::abs(at.b - std::exp(-0.5)) / std::exp(-0.5);
  const auto num = limit_quantities_numeric(kSeq, default_limit_ns(10000));
  const auto closed = limit_quantities_closed(kSeq);
  const double g_err = std::abs(num.gamma - closed.gamma) / closed.gamma;

  std::vector<double> beta_terms;
  for (std::size_t n : {1250u, 2500u, 5000u, 10000u})
    beta_terms.push_back(std::abs(limit_terms_at(kSeq, n).beta));
  const bool beta_ok = std::abs(num.beta) <= 1e-2 && decreasing(beta_terms);

  const auto cand = alpha_candidates(kSeq);
  const double a_stated = std::abs(num.alpha - cand.stated) / std::abs(cand.stated);
  const double a_exp = std::abs(num.alpha - cand.expansion) / std::abs(cand.expansion);
  const bool alpha_ok = std::min(a_stated, a_exp) <= 0.01;

  const bool ok = a_err <= 0.005 && b_err <= 0.005 && g_err <= 0.01 && beta_ok && alpha_ok;
  return {ok, "q^n " + fmt(a_err) + ", p^n " + fmt(b_err) + ", gamma " + fmt(g_err) + ", |beta| " +
                  fmt(std::abs(num.beta)) + (decreasing(beta_terms) ? " decreasing" : " NOT decreasing") +
                  ", alpha vs stated " + fmt(a_stated) + " / vs expansion " + fmt(a_exp)};
}

Outcome scaled_moments()
{
  const std::vector<std::size_t> ns{250, 500, 1000, 2000};
  const std::vector<double> xs{1.0};
  const auto r = scaled_central_moments(kSeq, ns, xs);
  const double limit = r.rows.front()[r.column("ref_mu2")]; // gamma x^2 + x at x = 1
  std::vector<double> dev;
  for (const auto& row : r.rows)
    dev.push_back(std::abs(row[r.column("scaled_mu2")] - limit));
  const double last = dev.back() / limit;
  return {decreasing(dev) && last <= 0.05,
          "deviations " + fmt(dev.front()) + " -> " + fmt(dev.back()) +
              (decreasing(dev) ? " decreasing" : " NOT decreasing") + ", n=2000 rel " + fmt(last) + " (tol 0.05)"};
}

Outcome korovkin()
{
  const auto r = korovkin_report(kSeq, {10, 100, 1000});
  double excess = -std::numeric_limits<double>::infinity();
  bool all_decrease = true;
  for (int i = 0; i < 3; ++i) {
    const std::string k = std::to_string(i);
    const auto norms = r.column_values("norm_e" + k);
    const auto bounds = r.column_values("bound_e" + k);
    for (std::size_t j = 0; j < norms.size(); ++j)
      excess = std::max(excess, norms[j] - bounds[j]);
    all_decrease = all_decrease && decreasing(norms);
  }
  return {excess <= 1e-6 && all_decrease,
          "max (norm - bound) " + fmt(excess) + " (slack 1e-6), " +
              (all_decrease ? "all decreasing" : "NOT all decreasing")};
}

Outcome rate()
{
  const std::vector<std::size_t> ns{10, 50, 250, 1000};
  bool ok = true;
  double worst = 0.0;
  std::string failures;
  for (const auto& tf : corpus_subset(FunctionClass::C2_star)) {
    const auto r = rate_report(tf, 2.0, kSeq, ns);
    const auto err = r.column_values("sup_error");
    const auto bound = r.column_values("bound");
    bool this_ok = decreasing(err) && decreasing(bound);
    for (std::size_t i = 0; i < err.size(); ++i) {
      this_ok = this_ok && err[i] <= bound[i];
      worst = std::max(worst, err[i] / bound[i]);
    }
    if (!this_ok)
      failures += " " + tf.id;
    ok = ok && this_ok;
  }
  return {ok, "max error/bound " + fmt(worst) + (failures.empty() ? "" : ", failing:" + failures)};
}

Outcome bounded_ratios()
{
  constexpr double kCap = 10.0;
  const std::vector<std::size_t> ns{10, 50, 250, 1000};
  const std::vector<double> xs{0.0, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0};
  double direct_max = 0.0, weighted_max = 0.0;
  for (const auto& tf : corpus_subset(FunctionClass::bounded)) {
    auto take = [&](const ExperimentReport& r) {
      for (const char* col : {"ratio", "ratio_root"})
        for (double v : r.column_values(col))
          direct_max = std::max(direct_max, v);
    };
    for (std::size_t n : ns)
      take(direct_bound_report(tf, n, kSeq.at(n), xs));
    take(direct_bound_report(tf, 50, PQParams(0.98, 0.95), xs));
  }
  for (const auto& tf : corpus_subset(FunctionClass::C2_star)) {
    const auto r = weighted_bound_report(tf, kSeq, ns);
    for (double v : r.column_values("ratio"))
      weighted_max = std::max(weighted_max, v);
    const auto err = r.column_values("weighted_error");
    const auto alt = r.column_values("omega_sqrt_beta");
    for (std::size_t i = 0; i < err.size(); ++i)
      if (err[i] > kZeroFloor)
        weighted_max = std::max(weighted_max, err[i] / alt[i]);
  }
  return {direct_max <= kCap && weighted_max <= kCap,
          "cap " + fmt(kCap) + ": direct max " + fmt(direct_max) + ", weighted max " + fmt(weighted_max)};
}

Outcome voronovskaya()
{
  const std::vector<std::size_t> ns{250, 500, 1000, 2000};
  const std::vector<double> xs{0.5, 1.0};
  bool ok = true;
  double worst_ratio = 0.0, worst_mismatch = 0.0;
  std::string variants;
  for (const char* id : {"e2", "x3"}) {
    const auto r = voronovskaya_report(find_test_function(id), kSeq, ns, xs);
    for (const auto& v : voronovskaya_summary(r)) {
      for (double ratio : v.deviation_ratios)
        worst_ratio = std::max(worst_ratio, ratio);
      worst_mismatch = std::max(worst_mismatch, v.relative_mismatch);
      ok = ok && v.relative_mismatch <= 0.05 && v.deviation_ratios.size() == ns.size() - 1 &&
           std::all_of(v.deviation_ratios.begin(), v.deviation_ratios.end(), [](double q) { return q <= 0.6; });
      const std::string tag = v.half_variant ? "half" : "stated";
      if (variants.find(tag) == std::string::npos)
        variants += (variants.empty() ? "" : "+") + tag;
    }
  }
  return {ok, "matched " + variants + " variant, max ratio/doubling " + fmt(worst_ratio) +
                  " (tol 0.6), max mismatch " + fmt(worst_mismatch) + " (tol 0.05)"};
}

std::string run_cli_in_process(const std::vector<std::string>& args, int& code)
{
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

std::string run_cli_binary(const std::string& binary, const std::vector<std::string>& args, int& code)
{
  std::string cmd = "'" + binary + "'";
  for (const auto& a : args)
    cmd += " '" + a + "'";
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) {
    code = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0)
    out.append(buf.data(), got);
  const int status = pclose(pipe.release());
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

Outcome determinism(const std::string& binary)
{
  const std::vector<std::vector<std::string>> argvs{
      {"eval", "--n", "5", "--p", "0.95", "--q", "0.9", "--fn", "sin", "--x", "0,0.5,1,2,7.5"},
      {"moments", "--n", "10", "--p", "0.9", "--q", "0.8", "--x", "1.5", "--max-order", "6"},
      {"limits", "--c", "1", "--d", "0.5"},
      {"korovkin", "--n-list", "10,100", "--nx", "400", "--nh", "40"},
      {"voronovskaya", "--fn", "x3"},
      {"direct", "--nx", "400", "--nh", "40"},
  };
  std::size_t runs = 0;
  for (const auto& args : argvs) {
    int c1 = 0, c2 = 0;
    const std::string a = run_cli_in_process(args, c1);
    const std::string b = run_cli_in_process(args, c2);
    if (c1 != 0 || c2 != 0 || a.empty() || a != b)
      return {false, "in-process mismatch for '" + args[0] + "'"};
    runs += 2;
    if (!binary.empty()) {
      const std::string x = run_cli_binary(binary, args, c1);
      const std::string y = run_cli_binary(binary, args, c2);
      if (c1 != 0 || c2 != 0 || x != y || x != a)
        return {false, "binary mismatch for '" + args[0] + "'"};
      runs += 2;
    }
  }
  return {true, std::to_string(runs) + " runs over " + std::to_string(argvs.size()) + " argv sets byte-identical" +
                    (binary.empty() ? " (in-process only)" : "")};
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<Outcome()> check;
};

} // namespace

int main(int argc, char** argv)
{
  const std::string binary = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria{
      {1, "moment recurrence vs brute-force series", 10, moment_oracle},
      {2, "closed-form moments vs recurrence", 1, closed_forms},
      {3, "partition of unity", 1, partition_of_unity},
      {4, "exactness on 1 and t", 1, exactness_rows},
      {5, "second central moment bound", 1, second_moment_bound},
      {6, "sequence limits", 5, sequence_limits},
      {7, "scaled second central moment", 30, scaled_moments},
      {8, "Korovkin test functions", 30, korovkin},
      {9, "rate bound on [0, 2]", 60, rate},
      {10, "direct and weighted bound ratios", 60, bounded_ratios},
      {11, "Voronovskaya limit", 60, voronovskaya},
      {12, "CLI determinism", 5, [&] { return determinism(binary); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = o.pass && in_time;
    failed += pass ? 0 : 1;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  " << c.title << ": " << o.detail
              << " [" << std::fixed << std::setprecision(2) << secs << " s / " << std::setprecision(0)
              << c.budget_s << " s" << (in_time ? "" : " OVER BUDGET") << "]" << std::defaultfloat << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
