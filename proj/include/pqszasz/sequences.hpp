#pragma once

// The rational parameter family q_n = n/(n+c), p_n = n/(n+d) (c > d >= 0)
// and the limits a, b, alpha, gamma, beta that drive the asymptotic results.

#include "pqszasz/pq_calculus.hpp"

#include <cstddef>
#include <vector>

namespace pqszasz {

class SequenceParams {
public:
  SequenceParams(double c, double d);

  double c() const noexcept { return c_; }
  double d() const noexcept { return d_; }

  double qn(std::size_t n) const;
  double pn(std::size_t n) const;
  PQParams at(std::size_t n) const;

private:
  double c_;
  double d_;
};

struct LimitQuantities {
  double a = 0.0;     ///< lim q_n^n
  double b = 0.0;     ///< lim p_n^n
  double alpha = 0.0; ///< lim [n](q_n - 1)
  double gamma = 0.0; ///< lim [n](p_n q_n - 2 q_n + 1)
  double beta = 0.0;  ///< lim [n](p_n^6/q_n^2 - 4p_n^3 + 6p_n q_n - 4q_n + 1)
};

/// a = e^{-c}, b = e^{-d}, gamma = e^{-d} - e^{-c}, beta = 0 and the
/// alpha in the form a (e^{-d} - e^{-c}) / (d - c).
LimitQuantities limit_quantities_closed(const SequenceParams& seq);

/// The two closed-form alpha candidates: a (e^{-d} - e^{-c}) / (d - c), and the value
/// c (e^{-d} - e^{-c}) / (d - c) obtained by expanding [n](q_n - 1) to first order.
struct AlphaCandidates {
  double stated = 0.0;
  double expansion = 0.0;
};
AlphaCandidates alpha_candidates(const SequenceParams& seq);

/// Raw (unextrapolated) values of the five limit expressions at one n.
LimitQuantities limit_terms_at(const SequenceParams& seq, std::size_t n);

/// Two-point Richardson extrapolation in 1/n over the last two entries of
/// n_list (strictly increasing, at least two entries).
LimitQuantities limit_quantities_numeric(const SequenceParams& seq,
                                         const std::vector<std::size_t>& n_list);

/// n_max/4, n_max/2, n_max.
std::vector<std::size_t> default_limit_ns(std::size_t n_max = 10000);

/// L from V(n1), V(n2) assuming V(n) = L + C/n.
double richardson(std::size_t n1, double v1, std::size_t n2, double v2);

} // namespace pqszasz
