#include "pqszasz/szasz_operator.hpp"

#include "pqszasz/errors.hpp"
#include "pqszasz/grid_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pqszasz {

double BasisExpansion::normalizer() const
{
  return std::exp(log_normalizer);
}

double node(std::size_t k, std::size_t n, const PQParams& params)
{
  if (n == 0)
    throw ValidationError("node: operator index n must be >= 1");
  if (k == 0)
    return 0.0;
  const double kd = static_cast<double>(k);
  return std::exp(std::log(pq_integer(k, params)) + (2.0 - kd) * std::log(params.q()) -
                  std::log(pq_integer(n, params)));
}

BasisExpansion basis_weights(std::size_t n, const PQParams& params, double x,
                             const SeriesControl& control)
{
  if (n == 0)
    throw ValidationError("basis_weights: operator index n must be >= 1");
  if (!std::isfinite(x) || x < 0.0) {
    std::ostringstream msg;
    msg << "basis_weights: x = " << x << " must be finite and >= 0";
    throw ValidationError(msg.str());
  }

  BasisExpansion out;
  out.n = n;
  out.x = x;
  if (x == 0.0) {
    out.weights = {1.0};
    out.nodes = {0.0};
    return out;
  }

  const double log_q = std::log(params.q());
  const double log_bracket_n = std::log(pq_integer(n, params));
  const double log_nx = log_bracket_n + std::log(x);
  const double log_tol = std::log(control.rel_tol());

  std::vector<double> log_terms;
  std::vector<double> nodes;

  // running log-sum-exp of the retained terms
  double run_max = 0.0;
  double run_scaled = 0.0;
  auto log_sum = [&] { return run_max + std::log(run_scaled); };

  double log_u = 0.0;
  double log_bracket_k = 0.0; // ln [k], unused at k = 0
  int passes = 0;

  for (std::size_t k = 0; k < control.max_terms(); ++k) {
    const double kd = static_cast<double>(k);
    const double x_k = k == 0 ? 0.0 : std::exp(log_bracket_k + (2.0 - kd) * log_q - log_bracket_n);
    log_terms.push_back(log_u);
    nodes.push_back(x_k);

    if (k == 0) {
      run_max = log_u;
      run_scaled = 1.0;
    } else if (log_u > run_max) {
      run_scaled = run_scaled * std::exp(run_max - log_u) + 1.0;
      run_max = log_u;
    } else {
      run_scaled += std::exp(log_u - run_max);
    }

    const double log_bracket_next = std::log(pq_integer(k + 1, params));
    const double log_ratio = kd * log_q + log_nx - log_bracket_next;

    bool ok = false;
    if (k >= 1) {
      // (1 + x_{j+1}^2)/(1 + x_j^2) <= max(1, (x_{j+1}/x_j)^2), nonincreasing in j
      const double log_node_growth = log_bracket_next - log_bracket_k - log_q;
      const double log_rho = log_ratio + 2.0 * std::max(0.0, log_node_growth);
      if (log_rho < 0.0) {
        const double log_s = log_sum();
        const double log_term_env = log_u + std::log1p(x_k * x_k);
        const double log_tail_env = log_term_env + log_rho - std::log(-std::expm1(log_rho));
        ok = log_term_env <= log_tol + log_s && log_tail_env <= log_tol + log_s;
      }
    }
    passes = ok ? passes + 1 : 0;

    if (passes >= 2) {
      const double log_s = log_sum();
      out.truncation = k;
      out.log_normalizer = log_s;
      out.tail_bound = std::exp(log_u + log_ratio - std::log(-std::expm1(log_ratio)) - log_s);
      out.weights.resize(log_terms.size());
      double total = 0.0;
      for (std::size_t j = 0; j < log_terms.size(); ++j) {
        out.weights[j] = std::exp(log_terms[j] - run_max);
        total += out.weights[j];
      }
      for (double& w : out.weights)
        w /= total;
      out.nodes = std::move(nodes);
      return out;
    }

    log_u += log_ratio;
    log_bracket_k = log_bracket_next;
  }

  std::ostringstream msg;
  msg << "basis_weights(n=" << n << ", p=" << params.p() << ", q=" << params.q() << ", x=" << x
      << ") did not converge within " << control.max_terms() << " terms";
  throw NonConvergence(msg.str());
}

double apply(const RealFunction& f, const BasisExpansion& basis)
{
  double acc = 0.0;
  for (std::size_t k = 0; k < basis.weights.size(); ++k) {
    const double v = f(basis.nodes[k]);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "f is not finite at node k = " << k << " (t = " << basis.nodes[k] << ")";
      throw NonFiniteValue(msg.str(), k);
    }
    acc += v * basis.weights[k];
  }
  return acc;
}

double apply(const RealFunction& f, std::size_t n, const PQParams& params, double x,
             const SeriesControl& control)
{
  return pqszasz::apply(f, basis_weights(n, params, x, control));
}

namespace {

double apply_tagged(const RealFunction& f, std::size_t n, const PQParams& params, double x,
                    const SeriesControl& control)
{
  try {
    return pqszasz::apply(f, n, params, x, control);
  } catch (const NonFiniteValue& e) {
    std::ostringstream msg;
    msg << "at x = " << x << ": " << e.what();
    throw NonFiniteValue(msg.str(), e.index());
  } catch (const NonConvergence& e) {
    std::ostringstream msg;
    msg << "at x = " << x << ": " << e.what();
    throw NonConvergence(msg.str());
  }
}

} // namespace

std::vector<double> apply_grid(const RealFunction& f, std::size_t n, const PQParams& params,
                               std::span<const double> xs, const SeriesControl& control)
{
  std::vector<double> out(xs.size());
  kernels::parallel_fill(out, [&](std::size_t i) { return apply_tagged(f, n, params, xs[i], control); });
  return out;
}

namespace serial {

std::vector<double> apply_grid(const RealFunction& f, std::size_t n, const PQParams& params,
                               std::span<const double> xs, const SeriesControl& control)
{
  std::vector<double> out(xs.size());
  kernels::serial_fill(out, [&](std::size_t i) { return apply_tagged(f, n, params, xs[i], control); });
  return out;
}

} // namespace serial

} // namespace pqszasz
