#ifndef GRIDBAND_BANDWIDTH_HPP
#define GRIDBAND_BANDWIDTH_HPP

// Closed-form bandwidth values for P_n^d, the multinomial bounds and the Gaussian estimate
// of the central coefficient.

#include "gridband/coeffs.hpp"

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace gridband {

/// bw(P_n^d) for d = 1..d_max, as sum_{i<d} top_sum(n, i).
inline std::vector<BigInt> bw_hales_sequence(int n, int d_max) {
  detail::require_n(n);
  std::vector<BigInt> out;
  std::vector<BigInt> row{BigInt(1)};
  BigInt acc = 0;
  for (int i = 0; i < d_max; ++i) {
    acc += sum_of_largest(CoeffRow{n, i, row}, static_cast<std::size_t>(n));
    out.push_back(acc);
    row = detail::next_row(row, n);
  }
  return out;
}

/// Bandwidth of the Hales labeling of P_n^d, which is the bandwidth of P_n^d.
inline BigInt bw_hales(int n, int d) {
  if (d < 1) throw std::invalid_argument("bw_hales: d must be >= 1");
  return bw_hales_sequence(n, d).back();
}

/// sum_{i=0}^{d-1} C(i, floor(i/2)).
inline BigInt bw_hypercube(int d) {
  if (d < 1) throw std::invalid_argument("bw_hypercube: d must be >= 1");
  BigInt s = 0;
  for (int i = 0; i < d; ++i) s += detail::binomial(i, i / 2);
  return s;
}

/// Bandwidth of the lexicographic labeling: (n+1)^(d-1).
inline BigInt bw_lex(int n, int d) {
  GridParams p(n, d);
  return big_pow(static_cast<std::uint64_t>(p.n) + 1, static_cast<std::uint64_t>(p.d) - 1);
}

struct BoundsPair {
  BigInt lower;  // M(n, d)
  BigInt upper;  // M(n, d+1)
};

inline BoundsPair bounds(int n, int d) {
  GridParams p(n, d);
  return {max_coeff(p.n, p.d), max_coeff(p.n, p.d + 1)};
}

struct AsymptoticEstimate {
  int n = 1;
  int d = 1;
  double sqrt_factor = 0;  // sqrt(6 / (pi (d+1) (n^2 + 2n)))
  double estimate = 0;     // (n+1)^(d+1) * sqrt_factor
};

/// Local-CLT approximation of M(n, d+1). The uniform law on {0..n} has variance
/// (n^2 + 2n) / 12, and the peak of a normal density is 1 / (sigma sqrt(2 pi)).
inline AsymptoticEstimate clt_estimate(int n, int d) {
  GridParams p(n, d);
  AsymptoticEstimate e{p.n, p.d, 0, 0};
  const double nn = p.n;
  e.sqrt_factor = std::sqrt(6.0 / (std::numbers::pi * (p.d + 1) * (nn * nn + 2 * nn)));
  e.estimate = big_pow(static_cast<std::uint64_t>(p.n) + 1, static_cast<std::uint64_t>(p.d) + 1)
                   .convert_to<double>() *
               e.sqrt_factor;
  return e;
}

/// clt_estimate(n, d) / M(n, d+1), with the big-integer quotient taken exactly first.
inline double clt_relative(int n, int d) {
  const AsymptoticEstimate e = clt_estimate(n, d);
  const BigInt scale = big_pow(static_cast<std::uint64_t>(n) + 1, static_cast<std::uint64_t>(d) + 1);
  return e.sqrt_factor * ratio_to_double(scale, max_coeff(n, d + 1));
}

struct RatioRow {
  int d = 1;
  BigInt hales;
  BigInt lex;
  double ratio = 0;
};

/// bw_hales(n, d) / bw_lex(n, d) for d = 1..d_max.
inline std::vector<RatioRow> ratio_table(int n, int d_max) {
  GridParams p(n, d_max);
  const auto hales = bw_hales_sequence(p.n, p.d);
  std::vector<RatioRow> out;
  for (int d = 1; d <= d_max; ++d) {
    RatioRow r{d, hales[static_cast<std::size_t>(d) - 1], bw_lex(n, d), 0};
    r.ratio = ratio_to_double(r.hales, r.lex);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace gridband

#endif  // GRIDBAND_BANDWIDTH_HPP
