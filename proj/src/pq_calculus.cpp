#include "pqszasz/pq_calculus.hpp"

#include "pqszasz/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace pqszasz {

PQParams::PQParams(double p, double q) : p_(p), q_(q)
{
  if (!(std::isfinite(p) && std::isfinite(q)) || !(q > 0.0) || !(q < p) || !(p <= 1.0)) {
    std::ostringstream msg;
    msg << "invalid (p,q) = (" << p << ", " << q << "): require 0 < q < p <= 1";
    throw ValidationError(msg.str());
  }
}

SeriesControl::SeriesControl(double rel_tol, std::size_t max_terms)
    : rel_tol_(rel_tol), max_terms_(max_terms)
{
  if (!(rel_tol > 0.0 && rel_tol < 1.0))
    throw ValidationError("series rel_tol must lie in (0, 1)");
  if (max_terms < 1)
    throw ValidationError("series max_terms must be at least 1");
}

namespace {

constexpr std::size_t kExplicitSumLimit = 64;

} // namespace

double pq_integer(std::size_t k, const PQParams& params)
{
  const double p = params.p();
  const double q = params.q();
  if (k == 0)
    return 0.0;
  if (k <= kExplicitSumLimit) {
    // sum_{i=0}^{k-1} p^i q^{k-1-i}, summed from the smallest term up
    // each term from pow: a running product drifts by O(k) ulps
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i)
      sum += std::pow(p, static_cast<double>(i)) * std::pow(q, static_cast<double>(k - 1 - i));
    return sum;
  }
  const double kd = static_cast<double>(k);
  const double one_minus_ratio_pow = -std::expm1(kd * std::log1p((q - p) / p));
  return std::exp(kd * std::log(p)) * one_minus_ratio_pow / (p - q);
}

double pq_factorial_log(std::size_t k, const PQParams& params)
{
  double acc = 0.0;
  for (std::size_t j = 2; j <= k; ++j)
    acc += std::log(pq_integer(j, params));
  return acc;
}

double pq_binomial(std::size_t n, std::size_t k, const PQParams& params)
{
  if (k > n) {
    std::ostringstream msg;
    msg << "pq_binomial: k = " << k << " exceeds n = " << n;
    throw ValidationError(msg.str());
  }
  return std::exp(pq_factorial_log(n, params) - pq_factorial_log(n - k, params) -
                  pq_factorial_log(k, params));
}

double pq_power(double x, double y, std::size_t n, const PQParams& params)
{
  double prod = 1.0;
  double pi = 1.0;
  double qi = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    prod *= pi * x + qi * y;
    pi *= params.p();
    qi *= params.q();
  }
  return prod;
}

double pq_derivative(const RealFunction& f, double x, const PQParams& params)
{
  const double p = params.p();
  const double q = params.q();
  if (x != 0.0)
    return (f(p * x) - f(q * x)) / ((p - q) * x);
  const double h = std::cbrt(std::numeric_limits<double>::epsilon()) * (1.0 + std::abs(f(0.0)));
  return (f(h) - f(-h)) / (2.0 * h);
}

namespace {

// sum_k base^{k(k-1)/2} x^k / [k]_{p,q}!  via the term ratio base^k x / [k+1].
double exp_series(double x, double base, const PQParams& params, const SeriesControl& control,
                  const char* name)
{
  if (!std::isfinite(x))
    throw ValidationError(std::string(name) + ": argument must be finite");
  if (x == 0.0)
    return 1.0;

  const long double tol = control.rel_tol();
  long double sum = 0.0L;
  long double term = 1.0L;
  long double base_pow = 1.0L; // base^k
  int passes = 0;

  for (std::size_t k = 0; k < control.max_terms(); ++k) {
    sum += term;
    const long double ratio =
        base_pow * static_cast<long double>(x) / static_cast<long double>(pq_integer(k + 1, params));
    const long double next = term * ratio;
    const long double abs_ratio = std::fabs(ratio);

    bool ok = false;
    if (abs_ratio < 1.0L) {
      const long double scale = std::fabs(sum);
      if (x > 0.0) {
        const long double tail = term * abs_ratio / (1.0L - abs_ratio);
        ok = term <= tol * scale && tail <= tol * scale;
      } else {
        ok = std::fabs(next) <= tol * scale;
      }
    }
    passes = ok ? passes + 1 : 0;
    if (passes >= 2)
      return static_cast<double>(sum);

    term = next;
    base_pow *= base;
  }
  std::ostringstream msg;
  msg << name << "(" << x << ") did not converge within " << control.max_terms() << " terms";
  throw NonConvergence(msg.str());
}

} // namespace

double big_exp_E(double x, const PQParams& params, const SeriesControl& control)
{
  return exp_series(x, params.q(), params, control, "E_pq");
}

double small_exp_e(double x, const PQParams& params, const SeriesControl& control)
{
  const double p = params.p();
  const double q = params.q();
  const double limit_ratio = p < 1.0 ? std::abs(x) * (p - q) / p : std::abs(x) * (1.0 - q);
  if (limit_ratio >= 1.0) {
    std::ostringstream msg;
    msg << "e_pq(" << x << ") diverges: limiting term ratio " << limit_ratio << " >= 1";
    throw NonConvergence(msg.str());
  }
  return exp_series(x, p, params, control, "e_pq");
}

} // namespace pqszasz
