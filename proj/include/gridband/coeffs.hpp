#ifndef GRIDBAND_COEFFS_HPP
#define GRIDBAND_COEFFS_HPP

// Rows of the extended Pascal triangle: the coefficients of (1 + x + ... + x^n)^d.

#include "gridband/types.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gridband {

/// values[k] = [x^k] (1 + x + ... + x^n)^d, for 0 <= k <= n*d.
struct CoeffRow {
  int n = 1;
  int d = 0;
  std::vector<BigInt> values;

  /// Coefficient of x^k, zero outside [0, n*d].
  const BigInt& at(long long k) const {
    static const BigInt zero{0};
    if (k < 0 || k >= static_cast<long long>(values.size())) return zero;
    return values[static_cast<std::size_t>(k)];
  }

  std::size_t size() const { return values.size(); }
};

/// Row entries in non-increasing order.
struct SortedCoeffArray {
  int n = 1;
  int d = 0;
  std::vector<BigInt> entries;

  /// 1-based access; positions past the end read as zero.
  BigInt position(std::size_t i) const {
    if (i == 0) throw std::out_of_range("sorted coefficient positions are 1-based");
    return i <= entries.size() ? entries[i - 1] : BigInt(0);
  }
};

struct DegreeInterval {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const DegreeInterval&, const DegreeInterval&) = default;
};

namespace detail {

inline void require_n(int n) {
  if (n < 1) throw std::invalid_argument("path edge count n must be >= 1, got " + std::to_string(n));
}

inline void require_d(int d) {
  if (d < 0) throw std::invalid_argument("power d must be >= 0, got " + std::to_string(d));
}

// One step of the extended Pascal identity C(d,k) = sum_{j=0..n} C(d-1,k-j),
// evaluated as a sliding window over the previous row.
inline std::vector<BigInt> next_row(const std::vector<BigInt>& prev, int n) {
  const std::size_t len = prev.size() + static_cast<std::size_t>(n);
  std::vector<BigInt> out(len);
  BigInt window = 0;
  for (std::size_t k = 0; k < len; ++k) {
    if (k < prev.size()) window += prev[k];
    if (k >= static_cast<std::size_t>(n) + 1) window -= prev[k - static_cast<std::size_t>(n) - 1];
    out[k] = window;
  }
  return out;
}

inline BigInt binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt r = 1;
  for (int i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

}  // namespace detail

/// Rows 0..d_max of the extended Pascal triangle for a fixed n.
class CoeffTriangle {
public:
  CoeffTriangle(int n, int d_max) : n_(n) {
    detail::require_n(n);
    detail::require_d(d_max);
    rows_.reserve(static_cast<std::size_t>(d_max) + 1);
    rows_.push_back({BigInt(1)});
    for (int d = 1; d <= d_max; ++d) rows_.push_back(detail::next_row(rows_.back(), n));
  }

  int n() const { return n_; }
  int d_max() const { return static_cast<int>(rows_.size()) - 1; }

  const std::vector<BigInt>& row(int d) const { return rows_.at(static_cast<std::size_t>(d)); }

  const BigInt& at(int d, long long k) const {
    static const BigInt zero{0};
    const auto& r = row(d);
    if (k < 0 || k >= static_cast<long long>(r.size())) return zero;
    return r[static_cast<std::size_t>(k)];
  }

private:
  int n_;
  std::vector<std::vector<BigInt>> rows_;
};

inline CoeffRow coeff_row(int n, int d) {
  detail::require_n(n);
  detail::require_d(d);
  std::vector<BigInt> r{BigInt(1)};
  for (int i = 0; i < d; ++i) r = detail::next_row(r, n);
  return CoeffRow{n, d, std::move(r)};
}

inline BigInt coeff(int n, int d, long long k) {
  if (k < 0 || k > static_cast<long long>(n) * d) {
    detail::require_n(n);
    detail::require_d(d);
    return 0;
  }
  return coeff_row(n, d).at(k);
}

/// M(n, d): the largest coefficient, located at degree floor(n*d / 2).
inline BigInt max_coeff(int n, int d) {
  CoeffRow r = coeff_row(n, d);
  return r.values[static_cast<std::size_t>(n) * d / 2];
}

inline SortedCoeffArray sorted_desc(const CoeffRow& row) {
  SortedCoeffArray s{row.n, row.d, row.values};
  std::sort(s.entries.begin(), s.entries.end(), std::greater<>());
  return s;
}

inline SortedCoeffArray sorted_desc(int n, int d) { return sorted_desc(coeff_row(n, d)); }

/// Sum of the `count` largest entries of a row (the whole row if it is shorter).
inline BigInt sum_of_largest(const CoeffRow& row, std::size_t count) {
  SortedCoeffArray s = sorted_desc(row);
  BigInt total = 0;
  for (std::size_t i = 0; i < std::min(count, s.entries.size()); ++i) total += s.entries[i];
  return total;
}

/// Sum of the n largest coefficients of (1 + x + ... + x^n)^i.
inline BigInt top_sum(int n, int i) {
  return sum_of_largest(coeff_row(n, i), static_cast<std::size_t>(n));
}

/// [x^k] (1 + x + x^2)^d as a sum of trinomial coefficients (d; d-k+l, k-2l, l).
inline BigInt trinomial_coeff(int d, int k) {
  detail::require_d(d);
  if (k < 0 || k > 2 * d) {
    throw std::out_of_range("trinomial_coeff: k = " + std::to_string(k) + " outside [0, " +
                            std::to_string(2 * d) + "]");
  }
  BigInt total = 0;
  for (int l = 0; l <= k / 2; ++l) {
    const int zeros = d - k + l;
    if (zeros < 0) continue;
    // choose the l twos, then the k-2l ones among the rest
    total += detail::binomial(d, l) * detail::binomial(d - l, k - 2 * l);
  }
  return total;
}

/// Degrees holding the i largest coefficients of row (n, d).
///
/// The window is centred on the peak degree p = floor((n*d + 1) / 2): for odd i it is
/// [p - i/2, p + i/2], for even i [p - i/2, p + i/2 - 1]. When the row is flat enough that
/// a window further left carries the same total, the leftmost such window is returned.
inline DegreeInterval middle_window(int n, int d, int i) {
  detail::require_n(n);
  detail::require_d(d);
  const int len = n * d + 1;
  if (i < 1 || i > len) {
    throw std::out_of_range("middle_window: i = " + std::to_string(i) + " outside [1, " +
                            std::to_string(len) + "]");
  }
  const int peak = (n * d + 1) / 2;
  DegreeInterval w = (i % 2 == 1) ? DegreeInterval{peak - i / 2, peak + i / 2}
                                  : DegreeInterval{peak - i / 2, peak + i / 2 - 1};

  const CoeffRow row = coeff_row(n, d);
  auto window_sum = [&](int lo) {
    BigInt s = 0;
    for (int k = lo; k < lo + i; ++k) s += row.at(k);
    return s;
  };
  const BigInt target = window_sum(w.lo);
  for (int lo = 0; lo < w.lo; ++lo) {
    if (window_sum(lo) == target) return DegreeInterval{lo, lo + i - 1};
  }
  return w;
}

}  // namespace gridband

#endif  // GRIDBAND_COEFFS_HPP
