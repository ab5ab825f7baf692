#include "pqszasz/sequences.hpp"

#include "pqszasz/errors.hpp"

#include <cmath>
#include <sstream>

namespace pqszasz {

SequenceParams::SequenceParams(double c, double d) : c_(c), d_(d)
{
  if (!(std::isfinite(c) && std::isfinite(d)) || !(d >= 0.0) || !(c > d)) {
    std::ostringstream msg;
    msg << "invalid sequence (c,d) = (" << c << ", " << d << "): require c > d >= 0";
    throw ValidationError(msg.str());
  }
}

double SequenceParams::qn(std::size_t n) const
{
  if (n == 0)
    throw ValidationError("sequence index n must be >= 1");
  const double nd = static_cast<double>(n);
  return nd / (nd + c_);
}

double SequenceParams::pn(std::size_t n) const
{
  if (n == 0)
    throw ValidationError("sequence index n must be >= 1");
  const double nd = static_cast<double>(n);
  return nd / (nd + d_);
}

PQParams SequenceParams::at(std::size_t n) const
{
  return PQParams(pn(n), qn(n));
}

LimitQuantities limit_quantities_closed(const SequenceParams& seq)
{
  LimitQuantities l;
  l.a = std::exp(-seq.c());
  l.b = std::exp(-seq.d());
  l.gamma = l.b - l.a;
  l.alpha = alpha_candidates(seq).stated;
  l.beta = 0.0;
  return l;
}

AlphaCandidates alpha_candidates(const SequenceParams& seq)
{
  const double spread = std::exp(-seq.d()) - std::exp(-seq.c());
  const double denom = seq.d() - seq.c();
  return {std::exp(-seq.c()) * spread / denom, seq.c() * spread / denom};
}

LimitQuantities limit_terms_at(const SequenceParams& seq, std::size_t n)
{
  const PQParams pq = seq.at(n);
  const double p = pq.p();
  const double q = pq.q();
  const double N = pq_integer(n, pq);
  const double nd = static_cast<double>(n);
  const double p3 = p * p * p;

  LimitQuantities l;
  l.a = std::exp(nd * std::log(q));
  l.b = std::exp(nd * std::log(p));
  l.alpha = N * (q - 1.0);
  l.gamma = N * (p * q - 2.0 * q + 1.0);
  l.beta = N * (p3 * p3 / (q * q) - 4.0 * p3 + 6.0 * p * q - 4.0 * q + 1.0);
  return l;
}

double richardson(std::size_t n1, double v1, std::size_t n2, double v2)
{
  const double a = static_cast<double>(n1);
  const double b = static_cast<double>(n2);
  return (b * v2 - a * v1) / (b - a);
}

LimitQuantities limit_quantities_numeric(const SequenceParams& seq,
                                         const std::vector<std::size_t>& n_list)
{
  if (n_list.size() < 2)
    throw ValidationError("limit_quantities_numeric: need at least two n values");
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1])
      throw ValidationError("limit_quantities_numeric: n_list must be strictly increasing");
  if (n_list.front() == 0)
    throw ValidationError("limit_quantities_numeric: n must be >= 1");

  const std::size_t n1 = n_list[n_list.size() - 2];
  const std::size_t n2 = n_list.back();
  const LimitQuantities v1 = limit_terms_at(seq, n1);
  const LimitQuantities v2 = limit_terms_at(seq, n2);

  LimitQuantities l;
  l.a = richardson(n1, v1.a, n2, v2.a);
  l.b = richardson(n1, v1.b, n2, v2.b);
  l.alpha = richardson(n1, v1.alpha, n2, v2.alpha);
  l.gamma = richardson(n1, v1.gamma, n2, v2.gamma);
  l.beta = richardson(n1, v1.beta, n2, v2.beta);
  return l;
}

std::vector<std::size_t> default_limit_ns(std::size_t n_max)
{
  if (n_max < 4)
    throw ValidationError("default_limit_ns: n_max must be >= 4");
  return {n_max / 4, n_max / 2, n_max};
}

} // namespace pqszasz
