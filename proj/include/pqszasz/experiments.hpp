#pragma once

// Numerical harnesses for the operator's convergence results. Each returns
// an ExperimentReport; unknown absolute constants are handled by reporting
// error/bound ratios rather than asserting an inequality.

#include "pqszasz/pq_calculus.hpp"
#include "pqszasz/report.hpp"
#include "pqszasz/sequences.hpp"
#include "pqszasz/smoothness.hpp"
#include "pqszasz/test_functions.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace pqszasz {

struct ExperimentSettings {
  SeriesControl control{};
  GridSpec grid{};
  /// n values feeding limit_quantities_numeric for alpha, gamma, beta.
  std::vector<std::size_t> limit_ns = default_limit_ns();
};

/// Rows (n, x, [n], [n]mu1, [n]mu2, [n]mu4, alpha x, gamma x^2 + x, beta x^4),
/// central moments by direct series, limits from limit_quantities_numeric.
ExperimentReport scaled_central_moments(const SequenceParams& seq, const std::vector<std::size_t>& n_list,
                                        std::span<const double> xs, const ExperimentSettings& settings = {});

/// Local bound for bounded f at fixed (p,q). Both second-modulus step
/// conventions are reported: sqrt(delta_n) (ratio) and delta_n^{1/4} (ratio_root).
ExperimentReport direct_bound_report(const TestFunction& tf, std::size_t n, const PQParams& params,
                                     std::span<const double> xs, const ExperimentSettings& settings = {});

/// Sup error on [0, a] (grid.n_x intervals) against
/// 6 M (1+a^2) a (a(1-pq) + 1/[n]) + 2 omega_{a+1}(f, a^2(1-pq) + a/[n]).
ExperimentReport rate_report(const TestFunction& tf, double a, const SequenceParams& seq,
                             const std::vector<std::size_t>& n_list, const ExperimentSettings& settings = {});

/// ||S e_i - e_i||_2 for i = 0, 1, 2 on the grid, with bounds 0, 1-q_n, (1-p_n q_n) + 1/[n].
ExperimentReport korovkin_report(const SequenceParams& seq, const std::vector<std::size_t>& n_list,
                                 const ExperimentSettings& settings = {});

/// sup |Sf - f| / (1+x^2)^{5/2} against Omega(f; 1/sqrt(beta_{p,q}(n))).
ExperimentReport weighted_bound_report(const TestFunction& tf, const SequenceParams& seq,
                                       const std::vector<std::size_t>& n_list,
                                       const ExperimentSettings& settings = {});

/// [n](Sf - f) against alpha x f' + (gamma x^2 + x) f'' (stated) and
/// alpha x f' + (gamma x^2 + x) f''/2 (half). Requires f1 and f2.
ExperimentReport voronovskaya_report(const TestFunction& tf, const SequenceParams& seq,
                                     const std::vector<std::size_t>& n_list, std::span<const double> xs,
                                     const ExperimentSettings& settings = {});

struct VoronovskayaVerdict {
  double x = 0.0;
  double extrapolated = 0.0; ///< Richardson over the last two n
  double reference = 0.0;    ///< the better-matching variant
  bool half_variant = false; ///< true when the f''/2 variant matched better
  double relative_mismatch = 0.0;
  std::vector<double> deviation_ratios; ///< dev(n_{i+1}) / dev(n_i)
};

/// Per-x summary of a voronovskaya_report.
std::vector<VoronovskayaVerdict> voronovskaya_summary(const ExperimentReport& report);

} // namespace pqszasz
