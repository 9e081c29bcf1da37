#ifndef GRIDBAND_VERTEX_HPP
#define GRIDBAND_VERTEX_HPP

#include "gridband/types.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gridband {

/// A vertex of P_n^d. coords[0] is the leftmost coordinate, coords[d-1] the rightmost.
struct Vertex {
  std::vector<int> coords;

  Vertex() = default;
  explicit Vertex(std::vector<int> c) : coords(std::move(c)) {}
  Vertex(std::initializer_list<int> c) : coords(c) {}

  int dim() const { return static_cast<int>(coords.size()); }
  int operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }

  static Vertex zeros(int d) { return Vertex(std::vector<int>(static_cast<std::size_t>(d), 0)); }
  static Vertex filled(int d, int value) {
    return Vertex(std::vector<int>(static_cast<std::size_t>(d), value));
  }

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Sum of the coordinates.
inline long long weight(const Vertex& u) {
  return std::accumulate(u.coords.begin(), u.coords.end(), 0LL);
}

inline bool is_valid(const Vertex& u, const GridParams& p) {
  if (u.dim() != p.d) return false;
  for (int c : u.coords)
    if (c < 0 || c > p.n) return false;
  return true;
}

/// "1,0,2" -- leftmost coordinate first.
inline std::string to_text(const Vertex& u) {
  std::string s;
  for (std::size_t i = 0; i < u.coords.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(u.coords[i]);
  }
  return s;
}

inline std::string describe(const Vertex& u) { return "(" + to_text(u) + ")"; }

inline void require_valid(const Vertex& u, const GridParams& p) {
  if (!is_valid(u, p)) {
    throw std::invalid_argument("vertex " + describe(u) + " is not in {0.." + std::to_string(p.n) +
                                "}^" + std::to_string(p.d));
  }
}

inline Vertex parse_vertex(std::string_view text) {
  Vertex u;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("malformed vertex '" + std::string(text) + "'");
    }
    u.coords.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return u;
}

inline Vertex parse_vertex(std::string_view text, const GridParams& p) {
  Vertex u = parse_vertex(text);
  require_valid(u, p);
  return u;
}

}  // namespace gridband

#endif  // GRIDBAND_VERTEX_HPP
