#include "pqszasz/cli.hpp"

#include "pqszasz/errors.hpp"
#include "pqszasz/experiments.hpp"
#include "pqszasz/moments.hpp"
#include "pqszasz/szasz_operator.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

namespace pqszasz::cli {

namespace {

struct Options {
  // operator parameters
  std::size_t n = 5;
  double p = 0.95;
  double q = 0.9;
  // sequence parameters
  double c = 1.0;
  double d = 0.5;
  std::size_t n_max = 10000;
  std::vector<std::size_t> n_list;
  std::vector<double> xs;
  double x = 0.0;
  std::string fn;
  double a = 2.0;
  std::size_t max_order = 4;
  std::string method = "recurrence";
  // numerics
  double rel_tol = SeriesControl::kDefaultRelTol;
  std::size_t max_terms = SeriesControl::kDefaultMaxTerms;
  double x_max = GridSpec::kDefaultXMax;
  std::size_t n_x = GridSpec::kDefaultNx;
  std::size_t n_h = GridSpec::kDefaultNh;
  // output
  std::string output;
  std::string format = "csv";

  SeriesControl control() const { return {rel_tol, max_terms}; }
  GridSpec grid() const { return {x_max, n_x, n_h}; }
  ExperimentSettings settings() const { return {control(), grid(), default_limit_ns(n_max)}; }
};

void add_output(CLI::App* sub, Options& o)
{
  sub->add_option("-o,--output", o.output, "Write to this file instead of standard output");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "table"}));
}

void add_control(CLI::App* sub, Options& o)
{
  sub->add_option("--rel-tol", o.rel_tol, "Series truncation relative tolerance")->capture_default_str();
  sub->add_option("--max-terms", o.max_terms, "Series term cap")->capture_default_str();
}

void add_grid(CLI::App* sub, Options& o)
{
  sub->add_option("--x-max", o.x_max, "Truncation of [0, inf) for grid suprema")->capture_default_str();
  sub->add_option("--nx", o.n_x, "x-grid intervals")->capture_default_str();
  sub->add_option("--nh", o.n_h, "step-grid resolution")->capture_default_str();
}

void add_pq(CLI::App* sub, Options& o)
{
  sub->add_option("--n", o.n, "Operator index n >= 1")->capture_default_str();
  sub->add_option("--p", o.p, "Parameter p in (q, 1]")->capture_default_str();
  sub->add_option("--q", o.q, "Parameter q in (0, p)")->capture_default_str();
}

void add_seq(CLI::App* sub, Options& o)
{
  sub->add_option("--c", o.c, "q_n = n/(n+c)")->capture_default_str();
  sub->add_option("--d", o.d, "p_n = n/(n+d), 0 <= d < c")->capture_default_str();
  sub->add_option("--n-max", o.n_max, "Largest n used for numeric limits")->capture_default_str();
}

std::string join(const std::vector<std::size_t>& v)
{
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Subcommands share one Options, so per-subcommand defaults are applied by
// the job of the subcommand that ran, through Defaulted::resolve.
template <typename T>
struct Defaulted {
  CLI::Option* opt;
  T value;
  void resolve(T& target) const
  {
    if (opt->count() == 0)
      target = value;
  }
};

Defaulted<std::vector<std::size_t>> add_n_list(CLI::App* sub, Options& o, std::vector<std::size_t> defaults)
{
  auto* opt = sub->add_option("--n-list", o.n_list, "Increasing operator indices")->delimiter(',');
  opt->default_str(join(defaults));
  return {opt, std::move(defaults)};
}

Defaulted<std::string> add_fn(CLI::App* sub, Options& o, std::string def)
{
  auto* opt = sub->add_option("--fn", o.fn, "Test function id: e0 e1 e2 x3 x4 exp-neg sin recip kink");
  opt->default_str(def);
  return {opt, std::move(def)};
}

void add_meta(ExperimentReport& r, const Options& o)
{
  r.set_meta("rel_tol", o.rel_tol);
  r.set_meta("max_terms", static_cast<double>(o.max_terms));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"(p,q)-Szasz-Mirakyan operators, moments and convergence experiments", "pqszasz"};
  app.require_subcommand(1);
  Options o;
  std::function<ExperimentReport()> job;

  auto* eval = app.add_subcommand("eval", "Evaluate S_{n,p,q}(f; x)");
  add_pq(eval, o);
  const auto eval_fn = add_fn(eval, o, "e1");
  eval->add_option("--x", o.xs, "Evaluation points (repeat or comma-separate)")->delimiter(',')->required();
  add_control(eval, o);
  add_output(eval, o);
  eval->callback([&] {
    job = [&] {
      eval_fn.resolve(o.fn);
      const PQParams pq(o.p, o.q);
      const TestFunction& tf = find_test_function(o.fn);
      const auto values = apply_grid(tf.f, o.n, pq, o.xs, o.control());
      ExperimentReport r;
      r.name = "eval";
      r.columns = {"x", "value"};
      r.set_meta("function", tf.id);
      r.set_meta("n", static_cast<double>(o.n));
      r.set_meta("p", o.p);
      r.set_meta("q", o.q);
      add_meta(r, o);
      for (std::size_t i = 0; i < o.xs.size(); ++i)
        r.add_row({o.xs[i], values[i]});
      return r;
    };
  });

  auto* moments = app.add_subcommand("moments", "Raw and central moments S(t^m; x), S((t-x)^m; x)");
  add_pq(moments, o);
  moments->add_option("--x", o.x, "Evaluation point x >= 0")->required();
  moments->add_option("--max-order", o.max_order, "Highest order")->capture_default_str();
  moments->add_option("--method", o.method, "Moment method")
      ->check(CLI::IsMember({"recurrence", "closed", "brute"}))
      ->capture_default_str();
  add_control(moments, o);
  add_output(moments, o);
  moments->callback([&] {
    job = [&] {
      const PQParams pq(o.p, o.q);
      const MomentMethod method = o.method == "closed"  ? MomentMethod::closed_form
                                  : o.method == "brute" ? MomentMethod::brute_force
                                                        : MomentMethod::recurrence;
      const double x = o.x;
      const MomentTable t = moment_table(o.max_order, o.n, pq, x, method, o.control());
      ExperimentReport r;
      r.name = "moments";
      r.columns = {"order", "raw", "central"};
      r.set_meta("n", static_cast<double>(o.n));
      r.set_meta("p", o.p);
      r.set_meta("q", o.q);
      r.set_meta("x", x);
      r.set_meta("method", o.method);
      add_meta(r, o);
      for (std::size_t m = 0; m < t.raw.size(); ++m)
        r.add_row({static_cast<double>(m), t.raw[m], t.central[m]});
      return r;
    };
  });

  auto* limits = app.add_subcommand("limits", "Limit quantities a, b, alpha, gamma, beta of the (c,d) family");
  add_seq(limits, o);
  add_output(limits, o);
  limits->callback([&] {
    job = [&] {
      const SequenceParams seq(o.c, o.d);
      const auto ns = default_limit_ns(o.n_max);
      const LimitQuantities num = limit_quantities_numeric(seq, ns);
      const LimitQuantities closed = limit_quantities_closed(seq);
      const AlphaCandidates alpha = alpha_candidates(seq);
      ExperimentReport r;
      r.name = "limits";
      r.label_column = "quantity";
      r.columns = {"numeric", "closed_form", "alt_closed_form"};
      r.set_meta("c", o.c);
      r.set_meta("d", o.d);
      r.set_meta("limit_ns", std::to_string(ns[0]) + " " + std::to_string(ns[1]) + " " + std::to_string(ns[2]));
      r.add_labeled_row("a", {num.a, closed.a, closed.a});
      r.add_labeled_row("b", {num.b, closed.b, closed.b});
      r.add_labeled_row("alpha", {num.alpha, alpha.stated, alpha.expansion});
      r.add_labeled_row("gamma", {num.gamma, closed.gamma, closed.gamma});
      r.add_labeled_row("beta", {num.beta, closed.beta, closed.beta});
      return r;
    };
  });

  auto* korovkin = app.add_subcommand("korovkin", "Weighted errors on e0, e1, e2 along the (c,d) family");
  add_seq(korovkin, o);
  const auto korovkin_ns = add_n_list(korovkin, o, {10, 100, 1000});
  add_control(korovkin, o);
  add_grid(korovkin, o);
  add_output(korovkin, o);
  korovkin->callback([&] {
    job = [&] {
      korovkin_ns.resolve(o.n_list);
      return korovkin_report(SequenceParams(o.c, o.d), o.n_list, o.settings());
    };
  });

  auto* voron = app.add_subcommand("voronovskaya", "Scaled error [n](Sf - f) against its limit");
  add_seq(voron, o);
  const auto voron_fn = add_fn(voron, o, "e2");
  const auto voron_ns = add_n_list(voron, o, {250, 500, 1000, 2000});
  voron->add_option("--x", o.xs, "Evaluation points")->delimiter(',');
  add_control(voron, o);
  add_output(voron, o);
  voron->callback([&] {
    job = [&] {
      voron_fn.resolve(o.fn);
      voron_ns.resolve(o.n_list);
      if (voron->count("--x") == 0)
        o.xs = {0.5, 1.0};
      return voronovskaya_report(find_test_function(o.fn), SequenceParams(o.c, o.d), o.n_list, o.xs,
                                 o.settings());
    };
  });

  auto* rate = app.add_subcommand("rate", "Sup error on [0, a] against the rate bound");
  add_seq(rate, o);
  const auto rate_fn = add_fn(rate, o, "e2");
  const auto rate_ns = add_n_list(rate, o, {10, 50, 250, 1000});
  rate->add_option("--a", o.a, "Interval end")->capture_default_str();
  add_control(rate, o);
  add_grid(rate, o);
  add_output(rate, o);
  rate->callback([&] {
    job = [&] {
      rate_fn.resolve(o.fn);
      rate_ns.resolve(o.n_list);
      return rate_report(find_test_function(o.fn), o.a, SequenceParams(o.c, o.d), o.n_list, o.settings());
    };
  });

  auto* direct = app.add_subcommand("direct", "Local error against second-modulus and modulus terms");
  add_pq(direct, o);
  const auto direct_fn = add_fn(direct, o, "exp-neg");
  direct->add_option("--x", o.xs, "Evaluation points")->delimiter(',');
  add_control(direct, o);
  add_grid(direct, o);
  add_output(direct, o);
  direct->callback([&] {
    job = [&] {
      direct_fn.resolve(o.fn);
      if (direct->count("--x") == 0)
        o.xs = {0.0, 0.5, 1.0, 2.0, 5.0};
      return direct_bound_report(find_test_function(o.fn), o.n, PQParams(o.p, o.q), o.xs, o.settings());
    };
  });

  auto* weighted = app.add_subcommand("weighted", "Weighted sup error against the weighted modulus");
  add_seq(weighted, o);
  const auto weighted_fn = add_fn(weighted, o, "e2");
  const auto weighted_ns = add_n_list(weighted, o, {10, 50, 250, 1000});
  add_control(weighted, o);
  add_grid(weighted, o);
  add_output(weighted, o);
  weighted->callback([&] {
    job = [&] {
      weighted_fn.resolve(o.fn);
      weighted_ns.resolve(o.n_list);
      return weighted_bound_report(find_test_function(o.fn), SequenceParams(o.c, o.d), o.n_list, o.settings());
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kValidation;
  }

  try {
    const ExperimentReport report = job();
    std::ofstream file;
    std::ostream* sink = &out;
    if (!o.output.empty()) {
      file.open(o.output, std::ios::binary);
      if (!file) {
        err << "error: cannot open output file '" << o.output << "'\n";
        return kValidation;
      }
      sink = &file;
    }
    if (o.format == "table")
      write_table(report, *sink);
    else
      write_csv(report, *sink);
    return kOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const NonFiniteValue& e) {
    err << "error: " << e.what() << '\n';
    return kNonConvergence;
  }
}

} // namespace pqszasz::cli
