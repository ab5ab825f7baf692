#include "pqszasz/smoothness.hpp"

#include "pqszasz/errors.hpp"
#include "pqszasz/grid_kernels.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace pqszasz {

GridSpec::GridSpec(double x_max, std::size_t n_x, std::size_t n_h) : x_max_(x_max), n_x_(n_x), n_h_(n_h)
{
  if (!(std::isfinite(x_max) && x_max > 0.0))
    throw ValidationError("grid x_max must be finite and > 0");
  if (n_x < 2 || n_h < 2)
    throw ValidationError("grid resolutions n_x and n_h must be >= 2");
}

namespace {

void check_delta(double delta, const char* where)
{
  if (!(std::isfinite(delta) && delta > 0.0)) {
    std::ostringstream msg;
    msg << where << ": step bound " << delta << " must be finite and > 0";
    throw ValidationError(msg.str());
  }
}

template <typename Fn>
double grid_max(bool parallel, std::ptrdiff_t count, Fn&& fn)
{
  return parallel ? kernels::parallel_max(count, fn) : kernels::serial_max(count, fn);
}

double modulus_impl(bool parallel, const RealFunction& f, double delta, const GridSpec& g)
{
  check_delta(delta, "modulus");
  const auto nh = g.n_h();
  return grid_max(parallel, static_cast<std::ptrdiff_t>(g.n_x() + 1), [&](std::ptrdiff_t i) {
    const double x = g.x(static_cast<std::size_t>(i));
    const double fx = f(x);
    double best = 0.0;
    for (std::size_t j = 1; j <= nh; ++j) {
      const double h = delta * static_cast<double>(j) / static_cast<double>(nh);
      best = std::max(best, std::abs(f(x + h) - fx));
    }
    return best;
  });
}

double modulus2_impl(bool parallel, const RealFunction& f, double step, const GridSpec& g)
{
  check_delta(step, "modulus2");
  const auto nh = g.n_h();
  return grid_max(parallel, static_cast<std::ptrdiff_t>(g.n_x() + 1), [&](std::ptrdiff_t i) {
    const double x = g.x(static_cast<std::size_t>(i));
    const double fx = f(x);
    double best = 0.0;
    for (std::size_t j = 1; j <= nh; ++j) {
      const double h = step * static_cast<double>(j) / static_cast<double>(nh);
      best = std::max(best, std::abs(f(x + 2.0 * h) - 2.0 * f(x + h) + fx));
    }
    return best;
  });
}

double modulus_local_impl(bool parallel, const RealFunction& f, double delta, double a, const GridSpec& g)
{
  check_delta(delta, "modulus_local");
  if (!(std::isfinite(a) && a > 0.0))
    throw ValidationError("modulus_local: interval end a must be finite and > 0");
  const std::size_t nx = g.n_x();
  const double dx = a / static_cast<double>(nx);
  std::vector<double> values(nx + 1);
  for (std::size_t i = 0; i <= nx; ++i)
    values[i] = f(a * static_cast<double>(i) / static_cast<double>(nx));
  const double span = std::floor(delta / dx * (1.0 + 1e-12));
  const std::size_t window = span >= static_cast<double>(nx) ? nx : static_cast<std::size_t>(span);
  return grid_max(parallel, static_cast<std::ptrdiff_t>(nx + 1), [&](std::ptrdiff_t ii) {
    const auto i = static_cast<std::size_t>(ii);
    double best = 0.0;
    for (std::size_t j = 1; j <= window && i + j <= nx; ++j)
      best = std::max(best, std::abs(values[i + j] - values[i]));
    return best;
  });
}

double weighted_modulus_impl(bool parallel, const RealFunction& f, double delta, const GridSpec& g)
{
  check_delta(delta, "weighted_modulus");
  const auto nh = g.n_h();
  return grid_max(parallel, static_cast<std::ptrdiff_t>(g.n_x() + 1), [&](std::ptrdiff_t i) {
    const double x = g.x(static_cast<std::size_t>(i));
    const double fx = f(x);
    const double wx = 1.0 + x * x;
    double best = 0.0;
    for (std::size_t j = 0; j < nh; ++j) {
      const double h = delta * static_cast<double>(j) / static_cast<double>(nh);
      best = std::max(best, std::abs(f(x + h) - fx) / ((1.0 + h * h) * wx));
    }
    return best;
  });
}

double weighted_norm_impl(bool parallel, const RealFunction& f, const GridSpec& g)
{
  return grid_max(parallel, static_cast<std::ptrdiff_t>(g.n_x() + 1), [&](std::ptrdiff_t i) {
    const double x = g.x(static_cast<std::size_t>(i));
    return std::abs(f(x)) / (1.0 + x * x);
  });
}

} // namespace

double modulus(const RealFunction& f, double delta, const GridSpec& grid)
{
  return modulus_impl(true, f, delta, grid);
}

double modulus2(const RealFunction& f, double step, const GridSpec& grid)
{
  return modulus2_impl(true, f, step, grid);
}

double modulus2_root_step(const RealFunction& f, double delta, const GridSpec& grid)
{
  check_delta(delta, "modulus2_root_step");
  return modulus2_impl(true, f, std::sqrt(delta), grid);
}

double modulus_local(const RealFunction& f, double delta, double a, const GridSpec& grid)
{
  return modulus_local_impl(true, f, delta, a, grid);
}

double weighted_modulus(const RealFunction& f, double delta, const GridSpec& grid)
{
  return weighted_modulus_impl(true, f, delta, grid);
}

double weighted_norm(const RealFunction& f, const GridSpec& grid)
{
  return weighted_norm_impl(true, f, grid);
}

GridSup weighted_norm_detail(const RealFunction& f, const GridSpec& grid)
{
  GridSup out;
  for (std::size_t i = 0; i <= grid.n_x(); ++i) {
    const double x = grid.x(i);
    const double v = std::abs(f(x)) / (1.0 + x * x);
    if (v > out.value) {
      out.value = v;
      out.location = x;
    }
    if (i == grid.n_x())
      out.boundary_value = v;
  }
  return out;
}

namespace serial {

double modulus(const RealFunction& f, double delta, const GridSpec& grid)
{
  return modulus_impl(false, f, delta, grid);
}

double modulus2(const RealFunction& f, double step, const GridSpec& grid)
{
  return modulus2_impl(false, f, step, grid);
}

double modulus_local(const RealFunction& f, double delta, double a, const GridSpec& grid)
{
  return modulus_local_impl(false, f, delta, a, grid);
}

double weighted_modulus(const RealFunction& f, double delta, const GridSpec& grid)
{
  return weighted_modulus_impl(false, f, delta, grid);
}

double weighted_norm(const RealFunction& f, const GridSpec& grid)
{
  return weighted_norm_impl(false, f, grid);
}

} // namespace serial

} // namespace pqszasz
