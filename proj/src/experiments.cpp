#include "pqszasz/experiments.hpp"

#include "pqszasz/errors.hpp"
#include "pqszasz/grid_kernels.hpp"
#include "pqszasz/moments.hpp"
#include "pqszasz/szasz_operator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace pqszasz {

namespace {

void describe_settings(ExperimentReport& r, const ExperimentSettings& s)
{
  r.set_meta("rel_tol", s.control.rel_tol());
  r.set_meta("max_terms", static_cast<double>(s.control.max_terms()));
  r.set_meta("x_max", s.grid.x_max());
  r.set_meta("n_x", static_cast<double>(s.grid.n_x()));
  r.set_meta("n_h", static_cast<double>(s.grid.n_h()));
}

void describe_sequence(ExperimentReport& r, const SequenceParams& seq)
{
  r.set_meta("c", seq.c());
  r.set_meta("d", seq.d());
}

std::string join(const std::vector<std::size_t>& v)
{
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? " " : "") << v[i];
  return os.str();
}

void describe_limits(ExperimentReport& r, const ExperimentSettings& s, const LimitQuantities& l)
{
  r.set_meta("limit_ns", join(s.limit_ns));
  r.set_meta("alpha", l.alpha);
  r.set_meta("gamma", l.gamma);
  r.set_meta("beta", l.beta);
}

void require_increasing(const std::vector<std::size_t>& n_list, const char* where)
{
  if (n_list.empty())
    throw ValidationError(std::string(where) + ": n_list is empty");
  for (std::size_t i = 0; i < n_list.size(); ++i)
    if (n_list[i] == 0 || (i > 0 && n_list[i] <= n_list[i - 1]))
      throw ValidationError(std::string(where) + ": n_list must be strictly increasing and >= 1");
}

void require_class(const TestFunction& tf, FunctionClass c, const char* cls, const char* where)
{
  if (!tf.in(c))
    throw ValidationError(std::string(where) + ": test function '" + tf.id + "' is not in class " + cls);
}

/// error/bound, with 0/0 read as 0 and a non-negligible error over a zero
/// bound reported as the largest finite double.
double safe_ratio(double error, double bound)
{
  if (bound > 0.0)
    return error / bound;
  return error <= 1e-12 ? 0.0 : std::numeric_limits<double>::max();
}

std::vector<double> x_grid(double hi, std::size_t intervals)
{
  std::vector<double> xs(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i)
    xs[i] = hi * static_cast<double>(i) / static_cast<double>(intervals);
  return xs;
}

} // namespace

ExperimentReport scaled_central_moments(const SequenceParams& seq, const std::vector<std::size_t>& n_list,
                                        std::span<const double> xs, const ExperimentSettings& settings)
{
  require_increasing(n_list, "scaled_central_moments");
  const LimitQuantities lim = limit_quantities_numeric(seq, settings.limit_ns);

  ExperimentReport r;
  r.name = "scaled_central_moments";
  r.columns = {"n", "x", "bracket_n", "scaled_mu1", "scaled_mu2", "scaled_mu4", "ref_mu1", "ref_mu2", "ref_mu4"};
  describe_sequence(r, seq);
  describe_settings(r, settings);
  describe_limits(r, settings, lim);

  std::vector<std::vector<double>> rows(n_list.size() * xs.size());
  kernels::parallel_fill(rows, [&](std::size_t cell) {
    const std::size_t n = n_list[cell / xs.size()];
    const double x = xs[cell % xs.size()];
    const PQParams pq = seq.at(n);
    const double N = pq_integer(n, pq);
    const BasisExpansion basis = basis_weights(n, pq, x, settings.control);
    const double mu1 = pqszasz::apply([x](double t) { return t - x; }, basis);
    const double mu2 = pqszasz::apply([x](double t) { return (t - x) * (t - x); }, basis);
    const double mu4 = pqszasz::apply([x](double t) { const double s = (t - x) * (t - x); return s * s; }, basis);
    return std::vector<double>{static_cast<double>(n), x, N, N * mu1, N * mu2, N * mu4,
                               lim.alpha * x, lim.gamma * x * x + x, lim.beta * x * x * x * x};
  });
  for (auto& row : rows)
    r.add_row(std::move(row));
  return r;
}

ExperimentReport direct_bound_report(const TestFunction& tf, std::size_t n, const PQParams& params,
                                     std::span<const double> xs, const ExperimentSettings& settings)
{
  require_class(tf, FunctionClass::bounded, "bounded", "direct_bound_report");
  ExperimentReport r;
  r.name = "direct_bound";
  r.columns = {"x",          "error",        "delta_n", "omega2_term", "omega2_root_term",
               "omega_term", "ratio",        "ratio_root"};
  r.set_meta("function", tf.id);
  r.set_meta("n", static_cast<double>(n));
  r.set_meta("p", params.p());
  r.set_meta("q", params.q());
  describe_settings(r, settings);

  const std::vector<double> values = apply_grid(tf.f, n, params, xs, settings.control);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    const double err = std::abs(values[i] - tf.f(x));
    const double dn = delta_n(n, params, x);
    const double w2 = dn > 0.0 ? modulus2(tf.f, std::sqrt(dn), settings.grid) : 0.0;
    const double w2_root = dn > 0.0 ? modulus2(tf.f, std::sqrt(std::sqrt(dn)), settings.grid) : 0.0;
    const double shift = (1.0 - params.q()) * x;
    const double w1 = shift > 0.0 ? modulus(tf.f, shift, settings.grid) : 0.0;
    r.add_row({x, err, dn, w2, w2_root, w1, safe_ratio(err, w2 + w1), safe_ratio(err, w2_root + w1)});
  }
  return r;
}

ExperimentReport rate_report(const TestFunction& tf, double a, const SequenceParams& seq,
                             const std::vector<std::size_t>& n_list, const ExperimentSettings& settings)
{
  require_class(tf, FunctionClass::C2_star, "C2*", "rate_report");
  require_increasing(n_list, "rate_report");
  if (!(std::isfinite(a) && a > 0.0))
    throw ValidationError("rate_report: a must be finite and > 0");

  ExperimentReport r;
  r.name = "rate";
  r.columns = {"n", "p", "q", "sup_error", "bound", "growth_term", "modulus_term", "bound_root"};
  r.set_meta("function", tf.id);
  r.set_meta("a", a);
  r.set_meta("growth_constant", tf.growth_constant);
  describe_sequence(r, seq);
  describe_settings(r, settings);

  const std::vector<double> xs = x_grid(a, settings.grid.n_x());
  for (std::size_t n : n_list) {
    const PQParams pq = seq.at(n);
    const double N = pq_integer(n, pq);
    const double one_minus_pq = 1.0 - pq.p() * pq.q();
    const std::vector<double> values = apply_grid(tf.f, n, pq, xs, settings.control);
    double sup_err = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
      sup_err = std::max(sup_err, std::abs(values[i] - tf.f(xs[i])));

    const double spread = a * a * one_minus_pq + a / N;
    const double growth = 6.0 * tf.growth_constant * (1.0 + a * a) * a * (a * one_minus_pq + 1.0 / N);
    const double mod = 2.0 * modulus_local(tf.f, spread, a + 1.0, settings.grid);
    const double mod_root = 2.0 * modulus_local(tf.f, std::sqrt(spread), a + 1.0, settings.grid);
    r.add_row({static_cast<double>(n), pq.p(), pq.q(), sup_err, growth + mod, growth, mod, growth + mod_root});
  }
  return r;
}

ExperimentReport korovkin_report(const SequenceParams& seq, const std::vector<std::size_t>& n_list,
                                 const ExperimentSettings& settings)
{
  require_increasing(n_list, "korovkin_report");
  ExperimentReport r;
  r.name = "korovkin";
  r.columns = {"n", "norm_e0", "norm_e1", "norm_e2", "bound_e0", "bound_e1", "bound_e2"};
  describe_sequence(r, seq);
  describe_settings(r, settings);

  const std::vector<double> xs = x_grid(settings.grid.x_max(), settings.grid.n_x());
  for (std::size_t n : n_list) {
    const PQParams pq = seq.at(n);
    const double N = pq_integer(n, pq);
    std::vector<std::array<double, 3>> errs(xs.size());
    kernels::parallel_fill(errs, [&](std::size_t i) {
      const double x = xs[i];
      const BasisExpansion basis = basis_weights(n, pq, x, settings.control);
      const double w = 1.0 + x * x;
      return std::array<double, 3>{
          std::abs(pqszasz::apply([](double) { return 1.0; }, basis) - 1.0) / w,
          std::abs(pqszasz::apply([](double t) { return t; }, basis) - x) / w,
          std::abs(pqszasz::apply([](double t) { return t * t; }, basis) - x * x) / w};
    });
    std::array<double, 3> sup{0.0, 0.0, 0.0};
    for (const auto& e : errs)
      for (std::size_t k = 0; k < 3; ++k)
        sup[k] = std::max(sup[k], e[k]);
    r.add_row({static_cast<double>(n), sup[0], sup[1], sup[2], 0.0, 1.0 - pq.q(),
               (1.0 - pq.p() * pq.q()) + 1.0 / N});
  }
  return r;
}

ExperimentReport weighted_bound_report(const TestFunction& tf, const SequenceParams& seq,
                                       const std::vector<std::size_t>& n_list,
                                       const ExperimentSettings& settings)
{
  require_class(tf, FunctionClass::C2_star, "C2*", "weighted_bound_report");
  require_increasing(n_list, "weighted_bound_report");
  ExperimentReport r;
  r.name = "weighted_bound";
  r.columns = {"n", "beta", "weighted_error", "omega", "ratio", "omega_sqrt_beta"};
  r.set_meta("function", tf.id);
  describe_sequence(r, seq);
  describe_settings(r, settings);

  const std::vector<double> xs = x_grid(settings.grid.x_max(), settings.grid.n_x());
  for (std::size_t n : n_list) {
    const PQParams pq = seq.at(n);
    const double beta = beta_pq(n, pq);
    const std::vector<double> values = apply_grid(tf.f, n, pq, xs, settings.control);
    double sup_err = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double w = 1.0 + xs[i] * xs[i];
      sup_err = std::max(sup_err, std::abs(values[i] - tf.f(xs[i])) / (w * w * std::sqrt(w)));
    }
    const double omega = weighted_modulus(tf.f, 1.0 / std::sqrt(beta), settings.grid);
    const double omega_small = weighted_modulus(tf.f, std::sqrt(beta), settings.grid);
    r.add_row({static_cast<double>(n), beta, sup_err, omega, safe_ratio(sup_err, omega), omega_small});
  }
  return r;
}

ExperimentReport voronovskaya_report(const TestFunction& tf, const SequenceParams& seq,
                                     const std::vector<std::size_t>& n_list, std::span<const double> xs,
                                     const ExperimentSettings& settings)
{
  if (!tf.has_derivatives())
    throw ValidationError("voronovskaya_report: test function '" + tf.id + "' has no derivatives");
  require_increasing(n_list, "voronovskaya_report");
  const LimitQuantities lim = limit_quantities_numeric(seq, settings.limit_ns);

  ExperimentReport r;
  r.name = "voronovskaya";
  r.columns = {"n", "x", "bracket_n", "scaled_error", "ref_stated", "ref_half", "dev_stated", "dev_half"};
  r.set_meta("function", tf.id);
  describe_sequence(r, seq);
  describe_settings(r, settings);
  describe_limits(r, settings, lim);

  std::vector<std::vector<double>> rows(n_list.size() * xs.size());
  kernels::parallel_fill(rows, [&](std::size_t cell) {
    const std::size_t n = n_list[cell / xs.size()];
    const double x = xs[cell % xs.size()];
    const PQParams pq = seq.at(n);
    const double N = pq_integer(n, pq);
    const double scaled = N * (pqszasz::apply(tf.f, n, pq, x, settings.control) - tf.f(x));
    const double drift = lim.alpha * x * tf.f1(x);
    const double diffusion = (lim.gamma * x * x + x) * tf.f2(x);
    const double stated = drift + diffusion;
    const double half = drift + 0.5 * diffusion;
    return std::vector<double>{static_cast<double>(n), x, N, scaled, stated, half,
                               std::abs(scaled - stated), std::abs(scaled - half)};
  });
  for (auto& row : rows)
    r.add_row(std::move(row));
  return r;
}

std::vector<VoronovskayaVerdict> voronovskaya_summary(const ExperimentReport& report)
{
  const std::size_t cn = report.column("n");
  const std::size_t cx = report.column("x");
  const std::size_t cs = report.column("scaled_error");
  const std::size_t c_stated = report.column("ref_stated");
  const std::size_t c_half = report.column("ref_half");
  const std::size_t d_stated = report.column("dev_stated");
  const std::size_t d_half = report.column("dev_half");

  std::vector<double> xs;
  for (const auto& row : report.rows)
    if (std::find(xs.begin(), xs.end(), row[cx]) == xs.end())
      xs.push_back(row[cx]);

  std::vector<VoronovskayaVerdict> out;
  for (double x : xs) {
    std::vector<const std::vector<double>*> series;
    for (const auto& row : report.rows)
      if (row[cx] == x)
        series.push_back(&row);
    if (series.size() < 2)
      throw ValidationError("voronovskaya_summary: need at least two n per x");

    const auto& last = *series.back();
    const auto& prev = *series[series.size() - 2];
    VoronovskayaVerdict v;
    v.x = x;
    v.extrapolated = richardson(static_cast<std::size_t>(prev[cn]), prev[cs],
                                static_cast<std::size_t>(last[cn]), last[cs]);
    const double miss_stated = std::abs(v.extrapolated - last[c_stated]);
    const double miss_half = std::abs(v.extrapolated - last[c_half]);
    v.half_variant = miss_half < miss_stated;
    v.reference = v.half_variant ? last[c_half] : last[c_stated];
    const double miss = v.half_variant ? miss_half : miss_stated;
    v.relative_mismatch = miss / std::max(std::abs(v.reference), 1e-300);
    const std::size_t dcol = v.half_variant ? d_half : d_stated;
    for (std::size_t i = 1; i < series.size(); ++i)
      v.deviation_ratios.push_back((*series[i])[dcol] / (*series[i - 1])[dcol]);
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace pqszasz
