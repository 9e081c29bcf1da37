#ifndef GRIDBAND_MATRIX_MARKET_HPP
#define GRIDBAND_MATRIX_MARKET_HPP

// Adjacency and graph-Laplacian matrices of P_n^d, rows/columns permuted by a labeling,
// written as Matrix Market coordinate files (symmetric, lower triangle, 1-based).

#include "gridband/grid.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace gridband {

enum class MatrixKind { adjacency, laplacian };

struct Triplet {
  std::uint64_t row = 0;  // 1-based
  std::uint64_t col = 0;  // 1-based
  long long value = 0;

  friend auto operator<=>(const Triplet&, const Triplet&) = default;
};

struct SparseSymmetric {
  std::uint64_t dim = 0;
  std::vector<Triplet> lower;  // row >= col, sorted row-major
};

inline SparseSymmetric build_matrix(const Labeling& f, MatrixKind kind) {
  const GridParams& p = f.params();
  SparseSymmetric m;
  m.dim = f.size();
  std::vector<long long> degree(m.dim + 1, 0);
  for (EdgeStream e(p); !e.done(); e.next()) {
    const auto [u, v] = *e;
    std::uint64_t a = f.label_of(u), b = f.label_of(v);
    if (a < b) std::swap(a, b);
    m.lower.push_back({a, b, kind == MatrixKind::laplacian ? -1 : 1});
    ++degree[a];
    ++degree[b];
  }
  if (kind == MatrixKind::laplacian)
    for (std::uint64_t i = 1; i <= m.dim; ++i) m.lower.push_back({i, i, degree[i]});
  std::sort(m.lower.begin(), m.lower.end());
  return m;
}

inline void write_matrix_market(std::ostream& out, const SparseSymmetric& m) {
  out << "%%MatrixMarket matrix coordinate integer symmetric\n";
  out << m.dim << ' ' << m.dim << ' ' << m.lower.size() << '\n';
  for (const Triplet& t : m.lower) out << t.row << ' ' << t.col << ' ' << t.value << '\n';
}

inline SparseSymmetric read_matrix_market(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("%%MatrixMarket matrix coordinate", 0) != 0 ||
      line.find("symmetric") == std::string::npos) {
    throw std::invalid_argument("not a symmetric Matrix Market coordinate file");
  }
  while (std::getline(in, line) && !line.empty() && line[0] == '%') {
  }
  std::istringstream size_line(line);
  std::uint64_t rows = 0, cols = 0, nnz = 0;
  if (!(size_line >> rows >> cols >> nnz) || rows != cols)
    throw std::invalid_argument("bad Matrix Market size line '" + line + "'");
  SparseSymmetric m;
  m.dim = rows;
  for (std::uint64_t i = 0; i < nnz; ++i) {
    Triplet t;
    if (!(in >> t.row >> t.col >> t.value))
      throw std::invalid_argument("Matrix Market file ends after " + std::to_string(i) + " entries");
    if (t.row < 1 || t.row > rows || t.col < 1 || t.col > rows || t.row < t.col)
      throw std::invalid_argument("Matrix Market entry outside the lower triangle");
    m.lower.push_back(t);
  }
  return m;
}

struct MatrixCheck {
  bool symmetric = true;       // expanded pattern equals its transpose
  bool zero_row_sums = true;
  std::uint64_t half_bandwidth = 0;
};

inline MatrixCheck check_matrix(const SparseSymmetric& m) {
  MatrixCheck c;
  std::map<std::pair<std::uint64_t, std::uint64_t>, long long> full;
  std::vector<long long> row_sum(m.dim + 1, 0);
  for (const Triplet& t : m.lower) {
    full[{t.row, t.col}] += t.value;
    row_sum[t.row] += t.value;
    if (t.row != t.col) {
      full[{t.col, t.row}] += t.value;
      row_sum[t.col] += t.value;
      c.half_bandwidth = std::max(c.half_bandwidth, t.row - t.col);
    }
  }
  for (const auto& [ij, v] : full) {
    auto it = full.find({ij.second, ij.first});
    if (it == full.end() || it->second != v) c.symmetric = false;
  }
  for (std::uint64_t i = 1; i <= m.dim; ++i)
    if (row_sum[i] != 0) c.zero_row_sums = false;
  return c;
}

}  // namespace gridband

#endif  // GRIDBAND_MATRIX_MARKET_HPP
