#pragma once

// Raw moments S(t^m; x) and central moments S((t-x)^r; x) of the operator,
// by recurrence, by explicit formulas (orders <= 4) and by direct series.

#include "pqszasz/pq_calculus.hpp"

#include <cstddef>
#include <vector>

namespace pqszasz {

enum class MomentMethod { closed_form, recurrence, brute_force };

struct MomentTable {
  std::size_t n = 1;
  double p = 1.0;
  double q = 0.5;
  double x = 0.0;
  MomentMethod method = MomentMethod::recurrence;
  std::vector<double> raw;     ///< raw[m] = S(t^m; x)
  std::vector<double> central; ///< central[r] = S((t-x)^r; x)
};

/// S(t^0..t^max_order; x) in one bottom-up pass of
///   S(t^{m+1}) = sum_j C(m,j) x p^j q^{m+1-2j} [n]^{j-m} S(t^j).
std::vector<double> raw_moments_recurrence(std::size_t max_order, std::size_t n,
                                           const PQParams& params, double x);

double moment_recurrence(std::size_t m, std::size_t n, const PQParams& params, double x);

/// Explicit polynomial in x for m <= 4; ValidationError otherwise.
double moment_closed(std::size_t m, std::size_t n, const PQParams& params, double x);

/// Explicit central moments for r in {1, 2, 4}; ValidationError otherwise.
double central_moment_closed(std::size_t r, std::size_t n, const PQParams& params, double x);

/// sum_j C(r,j) (-x)^{r-j} S(t^j; x) over recurrence moments.
double central_moment_expand(std::size_t r, std::size_t n, const PQParams& params, double x);

/// Central moments from raw ones by binomial expansion.
std::vector<double> central_from_raw(const std::vector<double>& raw, double x);

/// delta_n(x) = 2x^2(1-q) + x/[n].
double delta_n(std::size_t n, const PQParams& params, double x);

/// max{1 - pq, 1/[n]}.
double beta_pq(std::size_t n, const PQParams& params);

/// Orders 0..max_order by the chosen method. closed_form is limited to
/// max_order <= 4; brute_force sums the operator series directly.
MomentTable moment_table(std::size_t max_order, std::size_t n, const PQParams& params, double x,
                         MomentMethod method, const SeriesControl& control = {});

} // namespace pqszasz
