#pragma once

// Grid estimators of moduli of continuity/smoothness and of the weighted
// norm ||f||_2 = sup |f(x)| / (1 + x^2).
//
// Suprema over [0, inf) are taken over x_i = x_max * i / n_x (i = 0..n_x)
// and steps h_j = delta * j / n_h. Doubling n_x or n_h produces a superset
// of sample points, so refinement never lowers an estimate. All results are
// lower bounds on the true suprema.

#include "pqszasz/pq_calculus.hpp"

#include <cstddef>

namespace pqszasz {

class GridSpec {
public:
  static constexpr double kDefaultXMax = 50.0;
  static constexpr std::size_t kDefaultNx = 2000;
  static constexpr std::size_t kDefaultNh = 200;

  GridSpec() = default;
  GridSpec(double x_max, std::size_t n_x, std::size_t n_h);

  double x_max() const noexcept { return x_max_; }
  std::size_t n_x() const noexcept { return n_x_; }
  std::size_t n_h() const noexcept { return n_h_; }

  /// i-th x-grid point, i in [0, n_x].
  double x(std::size_t i) const { return x_max_ * static_cast<double>(i) / static_cast<double>(n_x_); }

private:
  double x_max_ = kDefaultXMax;
  std::size_t n_x_ = kDefaultNx;
  std::size_t n_h_ = kDefaultNh;
};

struct GridSup {
  double value = 0.0;          ///< grid supremum
  double location = 0.0;       ///< x attaining it
  double boundary_value = 0.0; ///< integrand at x = x_max
};

/// omega(f, delta): sup over 0 < h <= delta of |f(x+h) - f(x)|.
double modulus(const RealFunction& f, double delta, const GridSpec& grid = {});

/// Second modulus with step bound `step`: sup over 0 < h <= step of
/// |f(x+2h) - 2f(x+h) + f(x)|.
double modulus2(const RealFunction& f, double step, const GridSpec& grid = {});

/// Second modulus in the square-root convention: step bound sqrt(delta).
double modulus2_root_step(const RealFunction& f, double delta, const GridSpec& grid = {});

/// omega_a(f, delta): sup of |f(t) - f(x)| over x, t in [0, a], |t - x| <= delta,
/// sampled on a grid of [0, a] with n_x intervals.
double modulus_local(const RealFunction& f, double delta, double a, const GridSpec& grid = {});

/// Omega(f; delta): sup over 0 <= h < delta of |f(x+h) - f(x)| / ((1+h^2)(1+x^2)).
double weighted_modulus(const RealFunction& f, double delta, const GridSpec& grid = {});

double weighted_norm(const RealFunction& f, const GridSpec& grid = {});
GridSup weighted_norm_detail(const RealFunction& f, const GridSpec& grid = {});

namespace serial {

double modulus(const RealFunction& f, double delta, const GridSpec& grid = {});
double modulus2(const RealFunction& f, double step, const GridSpec& grid = {});
double modulus_local(const RealFunction& f, double delta, double a, const GridSpec& grid = {});
double weighted_modulus(const RealFunction& f, double delta, const GridSpec& grid = {});
double weighted_norm(const RealFunction& f, const GridSpec& grid = {});

} // namespace serial

} // namespace pqszasz
