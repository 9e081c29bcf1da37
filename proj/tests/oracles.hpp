#ifndef GRIDBAND_TESTS_ORACLES_HPP
#define GRIDBAND_TESTS_ORACLES_HPP

// Reference computations used only by the tests. None of these call into the code paths
// they are compared against.

#include "gridband/types.hpp"
#include "gridband/vertex.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace gridband::testing {

inline std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

/// (1 + x + ... + x^n)^d by binary exponentiation with schoolbook convolution.
inline std::vector<BigInt> convolution_row(int n, int d) {
  std::vector<BigInt> base(static_cast<std::size_t>(n) + 1, BigInt(1));
  std::vector<BigInt> result{BigInt(1)};
  while (d > 0) {
    if (d & 1) result = poly_mul(result, base);
    base = poly_mul(base, base);
    d >>= 1;
  }
  return result;
}

/// All of {0..n}^d in lexicographic order (leftmost most significant).
inline std::vector<Vertex> all_vertices(int n, int d) {
  std::vector<Vertex> out;
  Vertex u = Vertex::zeros(d);
  while (true) {
    out.push_back(u);
    int i = d - 1;
    while (i >= 0 && u[i] == n) u[i--] = 0;
    if (i < 0) break;
    ++u[i];
  }
  return out;
}

/// Hales order by sort key: (weight, then coordinates right to left, larger first).
inline std::vector<Vertex> hales_by_sort_key(int n, int d) {
  auto vs = all_vertices(n, d);
  std::stable_sort(vs.begin(), vs.end(), [](const Vertex& a, const Vertex& b) {
    std::vector<long long> ka{weight(a)}, kb{weight(b)};
    for (int i = a.dim() - 1; i >= 0; --i) ka.push_back(-a[i]), kb.push_back(-b[i]);
    return ka < kb;
  });
  return vs;
}

/// max |f(u) - f(v)| over edges, given f as a function of the vertex.
template <typename F>
std::uint64_t scan_bandwidth(int n, int d, F label) {
  std::uint64_t bw = 0;
  for (const Vertex& u : all_vertices(n, d)) {
    for (int i = 0; i < d; ++i) {
      if (u[i] == n) continue;
      Vertex v = u;
      ++v[i];
      const auto a = label(u), b = label(v);
      bw = std::max<std::uint64_t>(bw, a > b ? a - b : b - a);
    }
  }
  return bw;
}

inline BigInt binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  BigInt num = 1, den = 1;
  for (int i = 0; i < b; ++i) num *= a - i, den *= i + 1;
  return num / den;
}

}  // namespace gridband::testing

#endif  // GRIDBAND_TESTS_ORACLES_HPP
