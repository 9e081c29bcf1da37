#ifndef GRIDBAND_ORACLE_HPP
#define GRIDBAND_ORACLE_HPP

// Exact minimum bandwidth of P_n^d by exhaustive branch-and-bound over all labelings.
//
// Labels 1, 2, 3, ... are handed out in order. With target bandwidth B, a labeled vertex x
// forces every unlabeled neighbour to receive a label <= label(x) + B; these deadlines are
// checked as a scheduling problem (the j-th earliest deadline must leave room for j more
// placements). The search repeatedly asks "is there a labeling of bandwidth <= B?" with B
// one below the best labeling found so far, until the answer is no.

#include "gridband/bandwidth.hpp"
#include "gridband/grid.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gridband {

struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
  std::optional<double> time_limit_seconds;
};

struct OracleOptions {
  // Start from bw_hales + 1 instead of the bandwidth of an arbitrary labeling.
  bool seed_from_formula = true;
};

enum class CertificateStatus { proved, budget_exhausted };

inline const char* to_string(CertificateStatus s) {
  return s == CertificateStatus::proved ? "proved" : "budget-exhausted";
}

struct OptimalityCertificate {
  GridParams params;
  std::uint64_t optimal_value = 0;  // best found; optimal when status == proved
  std::vector<std::uint64_t> witness_by_lex;
  std::uint64_t nodes_explored = 0;
  CertificateStatus status = CertificateStatus::budget_exhausted;

  Labeling witness() const { return Labeling(params, witness_by_lex); }
};

namespace detail {

class BandwidthSearch {
public:
  BandwidthSearch(const GridParams& p, const SearchBudget& budget) : budget_(budget) {
    const std::uint64_t count = p.vertex_count_within(1u << 20, "brute-force search");
    std::vector<std::pair<std::string, std::uint64_t>> keyed;
    for (std::uint64_t i = 0; i < count; ++i) keyed.emplace_back(to_text(lex_vertex(i, p)), i);
    std::sort(keyed.begin(), keyed.end());

    n_ = static_cast<int>(count);
    lex_of_.resize(count);
    std::vector<int> local_of(count);
    for (int i = 0; i < n_; ++i) {
      lex_of_[static_cast<std::size_t>(i)] = keyed[static_cast<std::size_t>(i)].second;
      local_of[keyed[static_cast<std::size_t>(i)].second] = i;
    }
    adj_.resize(count);
    for (int i = 0; i < n_; ++i) {
      for (const Vertex& w : neighbors(lex_vertex(lex_of_[static_cast<std::size_t>(i)], p), p))
        adj_[static_cast<std::size_t>(i)].push_back(local_of[lex_index(w, p.n)]);
      std::sort(adj_[static_cast<std::size_t>(i)].begin(), adj_[static_cast<std::size_t>(i)].end());
    }
    start_ = std::chrono::steady_clock::now();
  }

  int vertex_count() const { return n_; }
  std::uint64_t nodes() const { return nodes_; }
  bool exhausted_budget() const { return out_of_budget_; }

  /// label_[i] for vertex i in text order (0-based labels).
  std::uint64_t bandwidth_of(const std::vector<int>& label) const {
    std::uint64_t bw = 0;
    for (int i = 0; i < n_; ++i)
      for (int j : adj_[static_cast<std::size_t>(i)])
        bw = std::max<std::uint64_t>(bw, static_cast<std::uint64_t>(
                                             std::abs(label[static_cast<std::size_t>(i)] -
                                                      label[static_cast<std::size_t>(j)])));
    return bw;
  }

  std::vector<int> text_order_labeling() const {
    std::vector<int> l(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) l[static_cast<std::size_t>(i)] = i;
    return l;
  }

  /// A labeling of bandwidth <= target, or nullopt if none exists or the budget ran out.
  std::optional<std::vector<int>> find(int target) {
    target_ = target;
    label_.assign(static_cast<std::size_t>(n_), -1);
    if (place(0)) return label_;
    return std::nullopt;
  }

  std::vector<std::uint64_t> to_lex_labels(const std::vector<int>& label) const {
    std::vector<std::uint64_t> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
      out[lex_of_[static_cast<std::size_t>(i)]] = static_cast<std::uint64_t>(label[static_cast<std::size_t>(i)]) + 1;
    return out;
  }

private:
  int deadline(int v) const {
    int dl = n_;
    for (int w : adj_[static_cast<std::size_t>(v)])
      if (label_[static_cast<std::size_t>(w)] >= 0) dl = std::min(dl, label_[static_cast<std::size_t>(w)] + target_);
    return dl;
  }

  bool tick() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes) out_of_budget_ = true;
    if (budget_.time_limit_seconds && (nodes_ & 0xfff) == 0) {
      std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
      if (el.count() > *budget_.time_limit_seconds) out_of_budget_ = true;
    }
    return !out_of_budget_;
  }

  // Every unlabeled vertex with a labeled neighbour must fit before its deadline, with
  // labels pos+1, pos+2, ... available.
  bool deadlines_feasible(int pos) {
    scratch_.clear();
    for (int v = 0; v < n_; ++v) {
      if (label_[static_cast<std::size_t>(v)] >= 0) continue;
      const int dl = deadline(v);
      if (dl < n_) scratch_.push_back(dl);
    }
    std::sort(scratch_.begin(), scratch_.end());
    for (std::size_t j = 0; j < scratch_.size(); ++j)
      if (scratch_[j] < pos + 1 + static_cast<int>(j)) return false;
    return true;
  }

  bool place(int pos) {
    if (pos == n_) return true;
    int forced = -1;
    for (int v = 0; v < n_; ++v) {
      if (label_[static_cast<std::size_t>(v)] >= 0 || deadline(v) != pos) continue;
      if (forced >= 0) return false;
      forced = v;
    }
    for (int v = 0; v < n_; ++v) {
      if (label_[static_cast<std::size_t>(v)] >= 0) continue;
      if (forced >= 0 && v != forced) continue;
      if (!tick()) return false;
      label_[static_cast<std::size_t>(v)] = pos;
      if (deadlines_feasible(pos) && place(pos + 1)) return true;
      label_[static_cast<std::size_t>(v)] = -1;
      if (out_of_budget_) return false;
    }
    return false;
  }

  SearchBudget budget_;
  int n_ = 0;
  int target_ = 0;
  std::vector<std::uint64_t> lex_of_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> label_;
  std::vector<int> scratch_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

inline OptimalityCertificate brute_force_bw(const GridParams& p, const SearchBudget& budget = {},
                                            const OracleOptions& options = {}) {
  detail::BandwidthSearch search(p, budget);
  OptimalityCertificate cert;
  cert.params = p;

  std::vector<int> best = search.text_order_labeling();
  std::uint64_t best_value = search.bandwidth_of(best);

  auto finish = [&](CertificateStatus status) {
    cert.optimal_value = best_value;
    cert.witness_by_lex = search.to_lex_labels(best);
    cert.nodes_explored = search.nodes();
    cert.status = status;
    return cert;
  };

  if (options.seed_from_formula) {
    const BigInt formula = bw_hales(p.n, p.d);
    if (formula < best_value) {
      if (auto found = search.find(formula.convert_to<int>())) {
        best = *found;
        best_value = search.bandwidth_of(best);
      } else if (search.exhausted_budget()) {
        return finish(CertificateStatus::budget_exhausted);
      }
      // Nothing at or below the formula value: carry on from the unseeded incumbent.
    }
  }

  while (best_value > 0) {
    auto found = search.find(static_cast<int>(best_value) - 1);
    if (!found) {
      return finish(search.exhausted_budget() ? CertificateStatus::budget_exhausted
                                              : CertificateStatus::proved);
    }
    best = *found;
    best_value = search.bandwidth_of(best);
  }
  return finish(CertificateStatus::proved);
}

enum class Verdict { confirmed, refuted, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::confirmed: return "confirmed";
    case Verdict::refuted: return "refuted";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct OptimalityVerification {
  Verdict verdict = Verdict::inconclusive;
  BigInt formula_value;
  OptimalityCertificate certificate;

  bool confirmed() const { return verdict == Verdict::confirmed; }
};

/// Does exhaustive search agree with bw_hales(n, d)?
inline OptimalityVerification verify_optimal(const GridParams& p, const SearchBudget& budget = {},
                                             const OracleOptions& options = {}) {
  OptimalityVerification out;
  out.formula_value = bw_hales(p.n, p.d);
  out.certificate = brute_force_bw(p, budget, options);
  if (out.certificate.status != CertificateStatus::proved) out.verdict = Verdict::inconclusive;
  else if (out.formula_value == out.certificate.optimal_value) out.verdict = Verdict::confirmed;
  else out.verdict = Verdict::refuted;
  return out;
}

// Certificates are labeling files with a '#' metadata header.

inline void write_certificate(std::ostream& out, const OptimalityCertificate& c) {
  out << "# gridband optimality certificate\n"
      << "# n: " << c.params.n << "\n"
      << "# d: " << c.params.d << "\n"
      << "# value: " << c.optimal_value << "\n"
      << "# status: " << to_string(c.status) << "\n"
      << "# nodes: " << c.nodes_explored << "\n";
  write_labeling(out, c.witness());
}

inline OptimalityCertificate read_certificate(std::istream& in) {
  OptimalityCertificate c;
  std::string body;
  std::string line;
  int n = -1, d = -1;
  bool have_value = false, have_status = false;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      const auto colon = line.find(':');
      if (colon == std::string::npos) continue;
      const std::string key = line.substr(2, colon - 2);
      const std::string val = line.substr(colon + 2);
      if (key == "n") n = std::stoi(val);
      else if (key == "d") d = std::stoi(val);
      else if (key == "value") c.optimal_value = std::stoull(val), have_value = true;
      else if (key == "nodes") c.nodes_explored = std::stoull(val);
      else if (key == "status") {
        if (val == "proved") c.status = CertificateStatus::proved;
        else if (val == "budget-exhausted") c.status = CertificateStatus::budget_exhausted;
        else throw std::invalid_argument("certificate: unknown status '" + val + "'");
        have_status = true;
      }
    } else {
      body += line;
      body += '\n';
    }
  }
  if (n < 0 || d < 0 || !have_value || !have_status)
    throw std::invalid_argument("certificate: incomplete metadata header");
  c.params = GridParams(n, d);
  std::istringstream labels(body);
  c.witness_by_lex = read_labeling(labels, c.params).by_lex();
  return c;
}

}  // namespace gridband

#endif  // GRIDBAND_ORACLE_HPP
