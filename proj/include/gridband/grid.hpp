#ifndef GRIDBAND_GRID_HPP
#define GRIDBAND_GRID_HPP

// The graph P_n^d, its labelings, and edge-scan bandwidth evaluation.

#include "gridband/hales.hpp"
#include "gridband/vertex.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gridband {

inline constexpr std::uint64_t kDefaultScanBudget = 1'000'000;

inline std::vector<Vertex> neighbors(const Vertex& u, const GridParams& p) {
  require_valid(u, p);
  std::vector<Vertex> out;
  for (int i = 0; i < p.d; ++i) {
    if (u[i] > 0) {
      out.push_back(u);
      --out.back()[i];
    }
    if (u[i] < p.n) {
      out.push_back(u);
      ++out.back()[i];
    }
  }
  return out;
}

using Edge = std::pair<Vertex, Vertex>;

/// Each undirected edge once, lower-weight (hence Hales-smaller) endpoint first.
/// Vertices are visited in lexicographic order, coordinates left to right.
class EdgeStream {
public:
  explicit EdgeStream(GridParams p) : params_(p), u_(Vertex::zeros(p.d)) { settle(); }

  bool done() const { return done_; }
  Edge operator*() const {
    Vertex v = u_;
    ++v[axis_];
    return {u_, v};
  }
  void next() {
    ++axis_;
    settle();
  }

private:
  void settle() {
    while (!done_) {
      while (axis_ < params_.d && u_[axis_] == params_.n) ++axis_;
      if (axis_ < params_.d) return;
      axis_ = 0;
      advance_vertex();
    }
  }

  void advance_vertex() {
    for (int i = params_.d - 1; i >= 0; --i) {
      if (u_[i] < params_.n) {
        ++u_[i];
        return;
      }
      u_[i] = 0;
    }
    done_ = true;
  }

  GridParams params_;
  Vertex u_;
  int axis_ = 0;
  bool done_ = false;
};

/// Base-(n+1) value of the coordinates, leftmost most significant.
inline BigInt lex_rank(const Vertex& u, const GridParams& p) {
  require_valid(u, p);
  BigInt r = 0;
  for (int c : u.coords) r = r * (p.n + 1) + c;
  return r;
}

inline Vertex lex_unrank(BigInt r, const GridParams& p) {
  if (r < 0 || r >= p.vertex_count()) {
    throw std::out_of_range("lex rank " + r.str() + " outside [0, " + p.vertex_count().str() + ")");
  }
  Vertex u = Vertex::zeros(p.d);
  for (int i = p.d - 1; i >= 0; --i) {
    u[i] = static_cast<int>(r % (p.n + 1));
    r /= (p.n + 1);
  }
  return u;
}

namespace detail {

inline std::uint64_t lex_index(const Vertex& u, int n) {
  std::uint64_t r = 0;
  for (int c : u.coords) r = r * static_cast<std::uint64_t>(n + 1) + static_cast<std::uint64_t>(c);
  return r;
}

inline Vertex lex_vertex(std::uint64_t r, const GridParams& p) {
  Vertex u = Vertex::zeros(p.d);
  for (int i = p.d - 1; i >= 0; --i) {
    u[i] = static_cast<int>(r % static_cast<std::uint64_t>(p.n + 1));
    r /= static_cast<std::uint64_t>(p.n + 1);
  }
  return u;
}

}  // namespace detail

/// A bijection V -> {1..|V|}, stored by lexicographic vertex index.
class Labeling {
public:
  Labeling(GridParams p, std::vector<std::uint64_t> label_by_lex)
      : params_(p), labels_(std::move(label_by_lex)) {}

  const GridParams& params() const { return params_; }
  std::uint64_t size() const { return labels_.size(); }

  std::uint64_t label_of(const Vertex& u) const { return labels_[detail::lex_index(u, params_.n)]; }
  std::uint64_t label_at_lex(std::uint64_t i) const { return labels_[i]; }
  const std::vector<std::uint64_t>& by_lex() const { return labels_; }

  /// inverse()[label - 1] = lex index of the vertex carrying that label.
  std::vector<std::uint64_t> inverse() const {
    std::vector<std::uint64_t> inv(labels_.size());
    for (std::uint64_t i = 0; i < labels_.size(); ++i) inv[labels_[i] - 1] = i;
    return inv;
  }

  Vertex vertex_with_label(std::uint64_t label) const {
    for (std::uint64_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return detail::lex_vertex(i, params_);
    throw std::out_of_range("no vertex carries label " + std::to_string(label));
  }

private:
  GridParams params_;
  std::vector<std::uint64_t> labels_;
};

inline Labeling hales_labeling(const GridParams& p, std::uint64_t budget = kDefaultScanBudget) {
  const std::uint64_t count = p.vertex_count_within(budget, "hales labeling");
  std::vector<std::uint64_t> labels(count);
  std::uint64_t next = 1;
  for (HalesStream s(p); !s.done(); s.next()) labels[detail::lex_index(*s, p.n)] = next++;
  return Labeling(p, std::move(labels));
}

inline Labeling lex_labeling(const GridParams& p, std::uint64_t budget = kDefaultScanBudget) {
  const std::uint64_t count = p.vertex_count_within(budget, "lex labeling");
  std::vector<std::uint64_t> labels(count);
  for (std::uint64_t i = 0; i < count; ++i) labels[i] = i + 1;
  return Labeling(p, std::move(labels));
}

// ---------------------------------------------------------------------------
// Labeling files: one "<coords>\t<label>" line per vertex, any order.
// Blank lines and lines starting with '#' are ignored.

inline Labeling read_labeling(std::istream& in, const GridParams& p,
                              std::uint64_t budget = kDefaultScanBudget) {
  const std::uint64_t count = p.vertex_count_within(budget, "labeling file");
  std::vector<std::uint64_t> labels(count, 0);
  std::vector<bool> label_used(count + 1, false);
  std::string line;
  std::size_t lineno = 0;
  std::uint64_t seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto where = "labeling line " + std::to_string(lineno) + ": ";
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw std::invalid_argument(where + "expected '<coords>\\t<label>'");
    Vertex u;
    try {
      u = parse_vertex(std::string_view(line).substr(0, tab), p);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + e.what());
    }
    const std::string label_text = line.substr(tab + 1);
    char* end = nullptr;
    const unsigned long long label = std::strtoull(label_text.c_str(), &end, 10);
    if (label_text.empty() || *end != '\0' || label < 1 || label > count) {
      throw std::invalid_argument(where + "label '" + label_text + "' outside [1, " +
                                  std::to_string(count) + "]");
    }
    const std::uint64_t idx = detail::lex_index(u, p.n);
    if (labels[idx] != 0) throw std::invalid_argument(where + "duplicate vertex " + describe(u));
    if (label_used[label]) throw std::invalid_argument(where + "duplicate label " + label_text);
    labels[idx] = label;
    label_used[label] = true;
    ++seen;
  }
  if (seen != count) {
    throw std::invalid_argument("labeling covers " + std::to_string(seen) + " of " +
                                std::to_string(count) + " vertices");
  }
  return Labeling(p, std::move(labels));
}

inline Labeling read_labeling_file(const std::string& path, const GridParams& p,
                                   std::uint64_t budget = kDefaultScanBudget) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open labeling file '" + path + "'");
  return read_labeling(in, p, budget);
}

/// Writes lines in label order.
inline void write_labeling(std::ostream& out, const Labeling& f) {
  const auto inv = f.inverse();
  for (std::uint64_t l = 0; l < inv.size(); ++l)
    out << to_text(detail::lex_vertex(inv[l], f.params())) << '\t' << (l + 1) << '\n';
}

// ---------------------------------------------------------------------------

struct HalesLabels {};
struct LexLabels {};
struct ExplicitLabels {
  std::string path;
};
using LabelingSpec = std::variant<HalesLabels, LexLabels, ExplicitLabels>;

enum class Method { formula, edge_scan, brute_force, bound };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::formula: return "formula";
    case Method::edge_scan: return "edge-scan";
    case Method::brute_force: return "brute-force";
    case Method::bound: return "bound";
  }
  return "?";
}

/// A bandwidth value with an edge (u, v) attaining it. For formula results no scan took
/// place and the witness is left empty.
struct BandwidthReport {
  BigInt value;
  Vertex u;
  Vertex v;
  std::uint64_t u_label = 0;
  std::uint64_t v_label = 0;
  Method method = Method::edge_scan;

  bool has_witness() const { return u.dim() > 0; }
};

inline Labeling materialize(const LabelingSpec& spec, const GridParams& p,
                            std::uint64_t budget = kDefaultScanBudget) {
  return std::visit(
      [&](const auto& s) -> Labeling {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, HalesLabels>) return hales_labeling(p, budget);
        else if constexpr (std::is_same_v<S, LexLabels>) return lex_labeling(p, budget);
        else return read_labeling_file(s.path, p, budget);
      },
      spec);
}

/// max |f(u) - f(v)| over all edges. Among maximizing edges the witness is the one whose
/// (Hales rank of u, Hales rank of v) pair is smallest, u being the Hales-smaller endpoint.
inline BandwidthReport labeling_bandwidth(const Labeling& f,
                                          std::uint64_t budget = kDefaultScanBudget) {
  const GridParams& p = f.params();
  const std::uint64_t count = p.vertex_count_within(budget, "too large for edge scan");
  const Labeling hales = hales_labeling(p, budget);

  std::vector<std::uint64_t> stride(static_cast<std::size_t>(p.d));
  std::uint64_t s = 1;
  for (int i = p.d - 1; i >= 0; --i) {
    stride[static_cast<std::size_t>(i)] = s;
    s *= static_cast<std::uint64_t>(p.n + 1);
  }

  std::uint64_t best = 0;
  std::uint64_t best_u = 0, best_v = 0;
  bool found = false;
  std::vector<int> digit(static_cast<std::size_t>(p.d), 0);
  for (std::uint64_t a = 0; a < count; ++a) {
    for (int i = 0; i < p.d; ++i) {
      if (digit[static_cast<std::size_t>(i)] == p.n) continue;
      const std::uint64_t b = a + stride[static_cast<std::size_t>(i)];
      const std::uint64_t la = f.label_at_lex(a), lb = f.label_at_lex(b);
      const std::uint64_t diff = la > lb ? la - lb : lb - la;
      if (!found || diff > best) {
        best = diff, best_u = a, best_v = b, found = true;
      } else if (diff == best) {
        const auto cand = std::pair(hales.label_at_lex(a), hales.label_at_lex(b));
        const auto cur = std::pair(hales.label_at_lex(best_u), hales.label_at_lex(best_v));
        if (cand < cur) best_u = a, best_v = b;
      }
    }
    for (int i = p.d - 1; i >= 0; --i) {
      if (++digit[static_cast<std::size_t>(i)] <= p.n) break;
      digit[static_cast<std::size_t>(i)] = 0;
    }
  }

  BandwidthReport r;
  r.method = Method::edge_scan;
  r.value = best;
  if (found) {
    r.u = detail::lex_vertex(best_u, p);
    r.v = detail::lex_vertex(best_v, p);
    r.u_label = f.label_at_lex(best_u);
    r.v_label = f.label_at_lex(best_v);
  }
  return r;
}

inline BandwidthReport labeling_bandwidth(const LabelingSpec& spec, const GridParams& p,
                                          std::uint64_t budget = kDefaultScanBudget) {
  p.vertex_count_within(budget, "too large for edge scan");
  return labeling_bandwidth(materialize(spec, p, budget), budget);
}

}  // namespace gridband

#endif  // GRIDBAND_GRID_HPP
