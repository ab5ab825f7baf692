#pragma once

// Data-parallel loop helpers. Every parallel kernel in the library has a
// serial twin with identical arithmetic; the tests hold them bit-equal.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <vector>

namespace pqszasz::kernels {

/// max over i in [0, count) of value(i), floored at zero. OpenMP-parallel.
template <typename Fn>
double parallel_max(std::ptrdiff_t count, Fn&& value)
{
  double best = 0.0;
#pragma omp parallel for reduction(max : best) schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    best = std::max(best, value(i));
  return best;
}

template <typename Fn>
double serial_max(std::ptrdiff_t count, Fn&& value)
{
  double best = 0.0;
  for (std::ptrdiff_t i = 0; i < count; ++i)
    best = std::max(best, value(i));
  return best;
}

/// out[i] = value(i). Exceptions are captured per index and the lowest
/// failing index is rethrown after the loop.
template <typename Out, typename Fn>
void parallel_fill(Out& out, Fn&& value)
{
  const auto count = static_cast<std::ptrdiff_t>(out.size());
  std::vector<std::exception_ptr> errors(out.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      out[idx] = value(idx);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e)
      std::rethrow_exception(e);
}

template <typename Out, typename Fn>
void serial_fill(Out& out, Fn&& value)
{
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = value(i);
}

} // namespace pqszasz::kernels
