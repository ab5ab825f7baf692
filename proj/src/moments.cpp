#include "pqszasz/moments.hpp"

#include "pqszasz/errors.hpp"
#include "pqszasz/szasz_operator.hpp"

#include <cmath>
#include <sstream>

namespace pqszasz {

namespace {

double binomial(std::size_t n, std::size_t k)
{
  double c = 1.0;
  for (std::size_t i = 1; i <= k; ++i)
    c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  return c;
}

void check_x(double x, const char* where)
{
  if (!std::isfinite(x) || x < 0.0) {
    std::ostringstream msg;
    msg << where << ": x = " << x << " must be finite and >= 0";
    throw ValidationError(msg.str());
  }
}

void check_n(std::size_t n, const char* where)
{
  if (n == 0)
    throw ValidationError(std::string(where) + ": operator index n must be >= 1");
}

} // namespace

std::vector<double> raw_moments_recurrence(std::size_t max_order, std::size_t n,
                                           const PQParams& params, double x)
{
  check_n(n, "raw_moments_recurrence");
  check_x(x, "raw_moments_recurrence");
  const double p = params.p();
  const double log_q = std::log(params.q());
  const double bracket_n = pq_integer(n, params);

  std::vector<double> s(max_order + 1);
  s[0] = 1.0;
  for (std::size_t m = 0; m < max_order; ++m) {
    double acc = 0.0;
    double p_pow = 1.0;
    for (std::size_t j = 0; j <= m; ++j) {
      const double q_exp = static_cast<double>(m + 1) - 2.0 * static_cast<double>(j);
      const double coeff = binomial(m, j) * x * p_pow * std::exp(q_exp * log_q) /
                           std::pow(bracket_n, static_cast<double>(m - j));
      acc += coeff * s[j];
      p_pow *= p;
    }
    s[m + 1] = acc;
  }
  return s;
}

double moment_recurrence(std::size_t m, std::size_t n, const PQParams& params, double x)
{
  return raw_moments_recurrence(m, n, params, x)[m];
}

double moment_closed(std::size_t m, std::size_t n, const PQParams& params, double x)
{
  check_n(n, "moment_closed");
  check_x(x, "moment_closed");
  const double p = params.p();
  const double q = params.q();
  const double N = pq_integer(n, params);
  const double x2 = x * x;
  const double x3 = x2 * x;
  switch (m) {
  case 0:
    return 1.0;
  case 1:
    return q * x;
  case 2:
    return p * q * x2 + q * q * x / N;
  case 3:
    return p * p * p * x3 + x2 * (p * p * q + 2.0 * p * q * q) / N + q * q * q * x / (N * N);
  case 4: {
    const double p3 = p * p * p;
    // x^3 coefficient p^3 q (p^2 + 2pq + 3q^2)/q^2; this is what the recurrence yields
    return p3 * p3 * x2 * x2 / (q * q) + x3 / N * p3 * q * (p * p + 2.0 * p * q + 3.0 * q * q) / (q * q) +
           x2 / (N * N) * p * q * (p * p + 3.0 * p * q + 3.0 * q * q) + q * q * q * q * x / (N * N * N);
  }
  default: {
    std::ostringstream msg;
    msg << "moment_closed: order " << m << " > 4 has no explicit form; use moment_recurrence";
    throw ValidationError(msg.str());
  }
  }
}

double central_moment_closed(std::size_t r, std::size_t n, const PQParams& params, double x)
{
  check_n(n, "central_moment_closed");
  check_x(x, "central_moment_closed");
  const double p = params.p();
  const double q = params.q();
  const double N = pq_integer(n, params);
  const double x2 = x * x;
  switch (r) {
  case 1:
    return (q - 1.0) * x;
  case 2:
    return x2 * (p * q - 2.0 * q + 1.0) + q * q * x / N;
  case 4: {
    const double p3 = p * p * p;
    const double c4 = p3 * p3 / (q * q) - 4.0 * p3 + 6.0 * p * q - 4.0 * q + 1.0;
    const double c3 = p3 * q * (p * p + 2.0 * p * q + 3.0 * q * q) / (q * q) -
                      4.0 * (p * p * q + 2.0 * p * q * q) + 6.0 * q * q;
    const double c2 = p * q * (p * p + 3.0 * p * q + 3.0 * q * q) - 4.0 * q * q * q;
    return x2 * x2 * c4 + x2 * x / N * c3 + x2 / (N * N) * c2 + x / (N * N * N) * q * q * q * q;
  }
  default: {
    std::ostringstream msg;
    msg << "central_moment_closed: order " << r << " not in {1, 2, 4}; use central_moment_expand";
    throw ValidationError(msg.str());
  }
  }
}

std::vector<double> central_from_raw(const std::vector<double>& raw, double x)
{
  std::vector<double> central(raw.size());
  for (std::size_t r = 0; r < raw.size(); ++r) {
    double acc = 0.0;
    for (std::size_t j = 0; j <= r; ++j)
      acc += binomial(r, j) * std::pow(-x, static_cast<double>(r - j)) * raw[j];
    central[r] = acc;
  }
  return central;
}

double central_moment_expand(std::size_t r, std::size_t n, const PQParams& params, double x)
{
  return central_from_raw(raw_moments_recurrence(r, n, params, x), x)[r];
}

double delta_n(std::size_t n, const PQParams& params, double x)
{
  check_n(n, "delta_n");
  check_x(x, "delta_n");
  return 2.0 * x * x * (1.0 - params.q()) + x / pq_integer(n, params);
}

double beta_pq(std::size_t n, const PQParams& params)
{
  check_n(n, "beta_pq");
  return std::max(1.0 - params.p() * params.q(), 1.0 / pq_integer(n, params));
}

MomentTable moment_table(std::size_t max_order, std::size_t n, const PQParams& params, double x,
                         MomentMethod method, const SeriesControl& control)
{
  MomentTable t;
  t.n = n;
  t.p = params.p();
  t.q = params.q();
  t.x = x;
  t.method = method;
  switch (method) {
  case MomentMethod::recurrence:
    t.raw = raw_moments_recurrence(max_order, n, params, x);
    t.central = central_from_raw(t.raw, x);
    break;
  case MomentMethod::closed_form:
    for (std::size_t m = 0; m <= max_order; ++m)
      t.raw.push_back(moment_closed(m, n, params, x));
    t.central = central_from_raw(t.raw, x);
    break;
  case MomentMethod::brute_force: {
    const BasisExpansion basis = basis_weights(n, params, x, control);
    for (std::size_t m = 0; m <= max_order; ++m) {
      const double md = static_cast<double>(m);
      t.raw.push_back(pqszasz::apply([md](double s) { return std::pow(s, md); }, basis));
      t.central.push_back(pqszasz::apply([md, x](double s) { return std::pow(s - x, md); }, basis));
    }
    break;
  }
  }
  return t;
}

} // namespace pqszasz
