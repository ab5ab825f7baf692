#pragma once

// (p,q)-calculus primitives: integers, factorials, binomials, powers,
// the (p,q)-difference operator and the two (p,q)-exponentials.

#include <cstddef>
#include <functional>

namespace pqszasz {

using RealFunction = std::function<double(double)>;

/// Validated shape parameters with 0 < q < p <= 1.
class PQParams {
public:
  PQParams(double p, double q);

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

private:
  double p_;
  double q_;
};

/// Truncation policy shared by every infinite series in the library.
class SeriesControl {
public:
  static constexpr double kDefaultRelTol = 1e-12;
  static constexpr std::size_t kDefaultMaxTerms = 10000;

  SeriesControl() = default;
  SeriesControl(double rel_tol, std::size_t max_terms);

  double rel_tol() const noexcept { return rel_tol_; }
  std::size_t max_terms() const noexcept { return max_terms_; }

private:
  double rel_tol_ = kDefaultRelTol;
  std::size_t max_terms_ = kDefaultMaxTerms;
};

/// [k]_{p,q} = (p^k - q^k)/(p - q), evaluated without cancellation.
double pq_integer(std::size_t k, const PQParams& params);

/// ln([k]_{p,q}!).
double pq_factorial_log(std::size_t k, const PQParams& params);

/// (p,q)-binomial coefficient; throws ValidationError when k > n.
double pq_binomial(std::size_t n, std::size_t k, const PQParams& params);

/// (x+y)(px+qy)...(p^{n-1}x+q^{n-1}y); 1 for n = 0.
double pq_power(double x, double y, std::size_t n, const PQParams& params);

/// (f(px) - f(qx)) / ((p-q)x). At x = 0 returns a central difference
/// estimate of f'(0), so f must be callable on a small neighbourhood of 0.
double pq_derivative(const RealFunction& f, double x, const PQParams& params);

/// E_{p,q}(x) = sum q^{k(k-1)/2} x^k / [k]!. Negative x uses alternating
/// truncation (first omitted term bound).
double big_exp_E(double x, const PQParams& params, const SeriesControl& control = {});

/// e_{p,q}(x) = sum p^{k(k-1)/2} x^k / [k]!. Converges only while the
/// limiting term ratio |x|(p-q)/p (or |x|(1-q) at p = 1) is below one.
double small_exp_e(double x, const PQParams& params, const SeriesControl& control = {});

} // namespace pqszasz
