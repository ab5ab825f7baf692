#pragma once

// The (p,q)-Szasz-Mirakyan operator
//
//   S_{n,p,q}(f; x) = sum_k f(x_k) s_k(x),
//   x_k = [k] / (q^{k-2} [n]),   s_k(x) = q^{k(k-1)/2} ([n] x)^k / ([k]! E([n] x))
//
// evaluated over a self-normalized truncated basis.

#include "pqszasz/pq_calculus.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace pqszasz {

/// Truncated basis for fixed (n, p, q, x). weights sum to one; tail_bound
/// bounds the omitted (unnormalized) mass relative to the retained mass.
struct BasisExpansion {
  std::size_t n = 1;
  double x = 0.0;
  std::vector<double> weights;
  std::vector<double> nodes;
  std::size_t truncation = 0; ///< index K of the last retained term
  double tail_bound = 0.0;
  double log_normalizer = 0.0; ///< ln E_{p,q}([n] x) up to the omitted tail
  double normalizer() const;
};

/// Builds the basis by the exact term ratio u_{k+1}/u_k = q^k [n] x / [k+1],
/// carried in log-domain. Truncation stops once u_k (1 + x_k^2) and its
/// geometric tail are both below rel_tol of the running sum, for two
/// consecutive k, so functions of quadratic growth are covered.
BasisExpansion basis_weights(std::size_t n, const PQParams& params, double x,
                             const SeriesControl& control = {});

/// x_k = [k] q^{2-k} / [n].
double node(std::size_t k, std::size_t n, const PQParams& params);

/// Operator value over a precomputed basis (fixed truncation, so exactly linear).
double apply(const RealFunction& f, const BasisExpansion& basis);

double apply(const RealFunction& f, std::size_t n, const PQParams& params, double x,
             const SeriesControl& control = {});

/// Element-wise apply, parallel over xs.
std::vector<double> apply_grid(const RealFunction& f, std::size_t n, const PQParams& params,
                               std::span<const double> xs, const SeriesControl& control = {});

namespace serial {

std::vector<double> apply_grid(const RealFunction& f, std::size_t n, const PQParams& params,
                               std::span<const double> xs, const SeriesControl& control = {});

} // namespace serial

} // namespace pqszasz
