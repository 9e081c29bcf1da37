#ifndef GRIDBAND_HALES_HPP
#define GRIDBAND_HALES_HPP

// Hales order (graded reverse lexicographic) on {0..n}^d.
//
// u precedes v when w(u) < w(v); at equal weight the coordinates are read from the
// rightmost position leftwards and, at the first difference, the vertex with the LARGER
// coordinate comes first. For P_2^2 this lists 00 01 10 02 11 20 12 21 22.
//
// Ranks are 0-based. User-facing labels are rank + 1.

#include "gridband/coeffs.hpp"
#include "gridband/vertex.hpp"

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <vector>

namespace gridband {

inline std::strong_ordering hales_compare(const Vertex& u, const Vertex& v) {
  if (u.dim() != v.dim()) {
    throw std::invalid_argument("hales_compare: dimension mismatch " + describe(u) + " vs " +
                                describe(v));
  }
  if (auto c = weight(u) <=> weight(v); c != 0) return c;
  for (int i = u.dim() - 1; i >= 0; --i) {
    if (u[i] != v[i]) return v[i] <=> u[i];
  }
  return std::strong_ordering::equal;
}

struct WeightClass {
  int n = 1;
  int d = 1;
  long long k = 0;
  BigInt size;
};

/// Rank and unrank for a fixed grid. Holds the coefficient rows 0..d.
class HalesOrder {
public:
  explicit HalesOrder(GridParams p) : params_(p), tri_(p.n, p.d) {
    const auto& top = tri_.row(p.d);
    weight_offset_.reserve(top.size() + 1);
    weight_offset_.push_back(0);
    for (const auto& c : top) weight_offset_.push_back(weight_offset_.back() + c);
  }

  const GridParams& params() const { return params_; }
  const CoeffTriangle& triangle() const { return tri_; }

  WeightClass weight_class(long long k) const {
    if (k < 0 || k > static_cast<long long>(params_.n) * params_.d)
      throw std::out_of_range("weight " + std::to_string(k) + " out of range");
    return {params_.n, params_.d, k, tri_.at(params_.d, k)};
  }

  /// Number of vertices that precede every vertex of weight k.
  const BigInt& weight_offset(long long k) const {
    return weight_offset_.at(static_cast<std::size_t>(k));
  }

  BigInt rank(const Vertex& u) const {
    require_valid(u, params_);
    const long long k = weight(u);
    return weight_offset_[static_cast<std::size_t>(k)] + rank_in_weight(u, params_.d, k);
  }

  Vertex unrank(const BigInt& r) const {
    if (r < 0 || r >= weight_offset_.back()) {
      throw std::out_of_range("hales rank " + r.str() + " outside [0, " +
                              weight_offset_.back().str() + ")");
    }
    auto it = std::upper_bound(weight_offset_.begin(), weight_offset_.end(), r);
    const long long k = (it - weight_offset_.begin()) - 1;
    BigInt rest = r - weight_offset_[static_cast<std::size_t>(k)];

    Vertex u = Vertex::zeros(params_.d);
    long long remaining = k;
    for (int m = params_.d; m >= 2; --m) {
      const long long hi = std::min<long long>(remaining, params_.n);
      const long long lo = std::max<long long>(0, remaining - static_cast<long long>(params_.n) * (m - 1));
      long long h = hi;
      for (; h > lo; --h) {
        const BigInt& block = tri_.at(m - 1, remaining - h);
        if (rest < block) break;
        rest -= block;
      }
      u[m - 1] = static_cast<int>(h);
      remaining -= h;
    }
    u[0] = static_cast<int>(remaining);
    return u;
  }

private:
  // Position of u among the vertices of weight k in {0..n}^m (u restricted to its first m
  // coordinates). Blocks are ordered by last coordinate descending.
  BigInt rank_in_weight(const Vertex& u, int m, long long k) const {
    BigInt r = 0;
    for (; m >= 2; --m) {
      const int b = u[m - 1];
      const long long hi = std::min<long long>(k, params_.n);
      for (long long h = b + 1; h <= hi; ++h) r += tri_.at(m - 1, k - h);
      k -= b;
    }
    return r;
  }

  GridParams params_;
  CoeffTriangle tri_;
  std::vector<BigInt> weight_offset_;
};

inline BigInt hales_rank(const Vertex& u, const GridParams& p) { return HalesOrder(p).rank(u); }

inline Vertex hales_unrank(const BigInt& r, const GridParams& p) { return HalesOrder(p).unrank(r); }

/// Streams the vertices of P_n^d in increasing Hales order with O(d) state.
///
///   for (HalesStream s(p); !s.done(); s.next()) use(*s);
class HalesStream {
public:
  explicit HalesStream(GridParams p) : params_(p), current_(Vertex::zeros(p.d)) {}

  bool done() const { return done_; }
  const Vertex& operator*() const { return current_; }
  const Vertex* operator->() const { return &current_; }
  long long current_weight() const { return weight_; }

  void next() {
    if (done_) return;
    if (!step_within_weight()) {
      ++weight_;
      if (weight_ > static_cast<long long>(params_.n) * params_.d) {
        done_ = true;
        return;
      }
      fill_prefix(params_.d, weight_);
    }
  }

private:
  // Move to the next vertex of the same weight: find the leftmost position p >= 1 whose
  // coordinate can drop by one while the prefix [0, p) absorbs the extra unit, then
  // rebuild the prefix as the earliest arrangement of its new total.
  bool step_within_weight() {
    long long prefix = 0;
    for (int pos = 1; pos < params_.d; ++pos) {
      prefix += current_[pos - 1];
      if (current_[pos] > 0 && prefix + 1 <= static_cast<long long>(params_.n) * pos) {
        --current_[pos];
        fill_prefix(pos, prefix + 1);
        return true;
      }
    }
    return false;
  }

  // Earliest arrangement of `total` over positions [0, len): load the rightmost first.
  void fill_prefix(int len, long long total) {
    for (int i = len - 1; i >= 0; --i) {
      const int c = static_cast<int>(std::min<long long>(total, params_.n));
      current_[i] = c;
      total -= c;
    }
  }

  GridParams params_;
  Vertex current_;
  long long weight_ = 0;
  bool done_ = false;
};

namespace detail {

inline void append_block(int n, int d, long long k, std::vector<Vertex>& out) {
  if (d == 1) {
    out.push_back(Vertex{static_cast<int>(k)});
    return;
  }
  // A_k^{(n,d)} stacks [A_{k-h}^{(n,d-1)} | h] for h from min(k, n) down to max(0, k - n(d-1)).
  // This single range covers the corner blocks (k = 0, k = nd), the ramp-up (k < n), the
  // plateau (n <= k <= nd - n) and the ramp-down (k > nd - n).
  const long long hi = std::min<long long>(k, n);
  const long long lo = std::max<long long>(0, k - static_cast<long long>(n) * (d - 1));
  for (long long h = hi; h >= lo; --h) {
    const std::size_t first = out.size();
    append_block(n, d - 1, k - h, out);
    for (std::size_t i = first; i < out.size(); ++i) out[i].coords.push_back(static_cast<int>(h));
  }
}

}  // namespace detail

/// Rows of the block A_k^{(n,d)} built by the recursive stacking construction.
inline std::vector<Vertex> block_matrix(int n, int d, long long k) {
  GridParams p(n, d);
  if (k < 0 || k > static_cast<long long>(n) * d) {
    throw std::out_of_range("block_matrix: k = " + std::to_string(k) + " outside [0, " +
                            std::to_string(static_cast<long long>(n) * d) + "]");
  }
  std::vector<Vertex> rows;
  detail::append_block(p.n, p.d, k, rows);
  return rows;
}

}  // namespace gridband

#endif  // GRIDBAND_HALES_HPP
