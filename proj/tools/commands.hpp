#ifndef GRIDBAND_TOOLS_COMMANDS_HPP
#define GRIDBAND_TOOLS_COMMANDS_HPP

// Subcommands of the gridband tool. Each writes its rendering to `out` and returns an exit
// code: 0 success, 1 usage error, 2 budget exceeded, 3 invariant violation.

#include "gridband/gridband.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace gridband::cli {

enum class Format { plain, json, csv };

enum ExitCode : int { kOk = 0, kUsage = 1, kBudget = 2, kInvariant = 3 };

struct Options {
  int n = 1;
  int d = 1;
  std::string order = "hales";
  std::string method = "formula";
  std::string kind = "laplacian";
  Format format = Format::plain;
  std::string out_path;
  std::string labeling_path;
  std::string vertex;
  std::optional<std::string> rank;   // 0-based
  std::optional<std::string> label;  // 1-based
  std::optional<std::uint64_t> budget;
  std::optional<double> time_limit;
  bool no_seed = false;
  bool self_test = false;
};

using json = nlohmann::ordered_json;

// A value published in the commonly reproduced table for n = 1, d = 1..11; the hypercube
// sum gives one more from d = 3 on.
inline const std::vector<long long> kListedHypercubeColumn = {1, 2, 3, 6, 12, 22, 42, 77, 147, 273, 525};

inline std::string plain_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

inline double json_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

inline std::string csv_quote(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

inline void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

inline const char* order_name(const std::string& order) {
  if (order == "hales") return "hales";
  if (order == "lex") return "lex";
  throw std::invalid_argument("unknown order '" + order + "' (expected hales or lex)");
}

// ---------------------------------------------------------------------------

inline int cmd_coeffs(const Options& o, std::ostream& out) {
  const CoeffRow row = coeff_row(o.n, o.d);
  switch (o.format) {
    case Format::plain:
      for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row.values[k];
      out << '\n';
      break;
    case Format::csv:
      out << "k,coeff\n";
      for (std::size_t k = 0; k < row.size(); ++k) out << k << ',' << row.values[k] << '\n';
      break;
    case Format::json: {
      json j{{"n", o.n}, {"d", o.d}, {"coefficients", json::array()}};
      for (const auto& c : row.values) j["coefficients"].push_back(c.str());
      emit_json(out, j);
      break;
    }
  }
  return kOk;
}

inline void render_report(const Options& o, std::ostream& out, const BandwidthReport& r,
                          const std::string& method, const std::string& status = "") {
  switch (o.format) {
    case Format::plain:
      out << r.value << '\n';
      out << "method: " << method << '\n';
      if (r.has_witness()) {
        out << "witness: " << describe(r.u) << " -> " << r.u_label << ", " << describe(r.v)
            << " -> " << r.v_label << '\n';
      }
      if (!status.empty()) out << "status: " << status << '\n';
      break;
    case Format::csv:
      out << "n,d,method,value,u,v,u_label,v_label,status\n";
      out << o.n << ',' << o.d << ',' << method << ',' << r.value << ','
          << (r.has_witness() ? csv_quote(to_text(r.u)) : "") << ','
          << (r.has_witness() ? csv_quote(to_text(r.v)) : "") << ','
          << (r.has_witness() ? std::to_string(r.u_label) : "") << ','
          << (r.has_witness() ? std::to_string(r.v_label) : "") << ',' << status << '\n';
      break;
    case Format::json: {
      json j{{"n", o.n}, {"d", o.d}, {"method", method}, {"value", r.value.str()}};
      if (r.has_witness()) {
        j["witness"] = {{"u", to_text(r.u)}, {"v", to_text(r.v)}, {"u_label", r.u_label},
                        {"v_label", r.v_label}};
      }
      if (!status.empty()) j["status"] = status;
      emit_json(out, j);
      break;
    }
  }
}

inline int cmd_bw(const Options& o, std::ostream& out) {
  const GridParams p(o.n, o.d);
  const std::uint64_t scan_budget = o.budget.value_or(kDefaultScanBudget);

  if (!o.labeling_path.empty()) {
    BandwidthReport r = labeling_bandwidth(ExplicitLabels{o.labeling_path}, p, scan_budget);
    render_report(o, out, r, "edge-scan");
    return kOk;
  }
  if (o.method == "formula") {
    BandwidthReport r;
    r.value = bw_hales(p.n, p.d);
    r.method = Method::formula;
    render_report(o, out, r, "formula");
    return kOk;
  }
  if (o.method == "hales-scan") {
    BandwidthReport r = labeling_bandwidth(HalesLabels{}, p, scan_budget);
    if (r.value != bw_hales(p.n, p.d)) {
      throw InvariantViolation("hales edge scan " + r.value.str() + " disagrees with formula " +
                               bw_hales(p.n, p.d).str());
    }
    render_report(o, out, r, "edge-scan");
    return kOk;
  }
  if (o.method == "lex") {
    const BigInt formula = bw_lex(p.n, p.d);
    if (p.vertex_count() <= scan_budget) {
      BandwidthReport r = labeling_bandwidth(LexLabels{}, p, scan_budget);
      if (r.value != formula)
        throw InvariantViolation("lex edge scan " + r.value.str() + " disagrees with " + formula.str());
      render_report(o, out, r, "edge-scan");
    } else {
      BandwidthReport r;
      r.value = formula;
      r.method = Method::formula;
      render_report(o, out, r, "formula");
    }
    return kOk;
  }
  if (o.method == "brute") {
    SearchBudget b;
    if (o.budget) b.max_nodes = *o.budget;
    b.time_limit_seconds = o.time_limit;
    const OptimalityCertificate c = brute_force_bw(p, b, OracleOptions{!o.no_seed});
    if (c.status != CertificateStatus::proved) {
      throw BudgetExceeded("brute-force search exhausted its budget after " +
                           std::to_string(c.nodes_explored) + " nodes; best labeling found has bandwidth " +
                           std::to_string(c.optimal_value));
    }
    BandwidthReport r = labeling_bandwidth(c.witness());
    r.method = Method::brute_force;
    if (r.value != c.optimal_value) throw InvariantViolation("certificate witness does not rescan");
    render_report(o, out, r, "brute-force", to_string(c.status));
    return kOk;
  }
  throw std::invalid_argument("unknown method '" + o.method +
                              "' (expected formula, hales-scan, lex or brute)");
}

inline int cmd_table(const Options& o, std::ostream& out) {
  const int n_max = o.n, d_max = o.d;
  if (n_max < 1 || d_max < 1) throw std::invalid_argument("table needs --n >= 1 and --d >= 1");
  std::vector<std::vector<BigInt>> cols;
  for (int n = 1; n <= n_max; ++n) cols.push_back(bw_hales_sequence(n, d_max));

  std::vector<int> diverging;
  for (int d = 1; d <= std::min<int>(d_max, static_cast<int>(kListedHypercubeColumn.size())); ++d)
    if (cols[0][static_cast<std::size_t>(d) - 1] != kListedHypercubeColumn[static_cast<std::size_t>(d) - 1])
      diverging.push_back(d);

  std::string note;
  if (!diverging.empty()) {
    const GridParams q3(1, 3);
    const auto cert = brute_force_bw(q3, SearchBudget{}, OracleOptions{false});
    std::ostringstream s;
    s << "n=1 column is sum_{i<d} C(i, floor(i/2)); it exceeds the often-listed values "
      << "1,2,3,6,12,22,42,77,147,273,525 by one for d >= 3. Exhaustive search on P_1^3: "
      << "bandwidth " << cert.optimal_value << " (" << to_string(cert.status) << ").";
    note = s.str();
  }

  switch (o.format) {
    case Format::plain: {
      out << "d\\n";
      for (int n = 1; n <= n_max; ++n) out << '\t' << n;
      out << '\n';
      for (int d = 1; d <= d_max; ++d) {
        out << d;
        for (int n = 1; n <= n_max; ++n) out << '\t' << cols[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(d) - 1];
        out << '\n';
      }
      if (!note.empty()) out << "note: " << note << '\n';
      break;
    }
    case Format::csv: {
      out << 'd';
      for (int n = 1; n <= n_max; ++n) out << ",n=" << n;
      out << '\n';
      for (int d = 1; d <= d_max; ++d) {
        out << d;
        for (int n = 1; n <= n_max; ++n) out << ',' << cols[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(d) - 1];
        out << '\n';
      }
      break;
    }
    case Format::json: {
      json rows = json::array();
      for (int d = 1; d <= d_max; ++d) {
        json r = json::array();
        for (int n = 1; n <= n_max; ++n) r.push_back(cols[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(d) - 1].str());
        rows.push_back(r);
      }
      json j{{"n_max", n_max}, {"d_max", d_max}, {"rows", rows}};
      if (!note.empty()) {
        j["divergent_n1_rows"] = diverging;
        j["note"] = note;
      }
      emit_json(out, j);
      break;
    }
  }
  return kOk;
}

inline Labeling labeling_for(const std::string& order, const GridParams& p, std::uint64_t budget) {
  return std::string(order_name(order)) == "hales" ? hales_labeling(p, budget) : lex_labeling(p, budget);
}

inline int cmd_label(const Options& o, std::ostream& out) {
  const GridParams p(o.n, o.d);
  const std::uint64_t budget = o.budget.value_or(100'000);
  const Labeling f = labeling_for(o.order, p, budget);
  const auto inv = f.inverse();
  switch (o.format) {
    case Format::plain:
      for (std::uint64_t l = 0; l < inv.size(); ++l)
        out << to_text(detail::lex_vertex(inv[l], p)) << '\t' << (l + 1) << '\n';
      break;
    case Format::csv:
      out << "label,vertex\n";
      for (std::uint64_t l = 0; l < inv.size(); ++l)
        out << (l + 1) << ',' << csv_quote(to_text(detail::lex_vertex(inv[l], p))) << '\n';
      break;
    case Format::json: {
      json rows = json::array();
      for (std::uint64_t l = 0; l < inv.size(); ++l)
        rows.push_back({{"label", l + 1}, {"vertex", to_text(detail::lex_vertex(inv[l], p))}});
      emit_json(out, json{{"n", o.n}, {"d", o.d}, {"order", o.order}, {"labels", rows}});
      break;
    }
  }
  return kOk;
}

inline int cmd_rank(const Options& o, std::ostream& out) {
  const GridParams p(o.n, o.d);
  const Vertex u = parse_vertex(o.vertex, p);
  const BigInt r = std::string(order_name(o.order)) == "hales" ? hales_rank(u, p) : lex_rank(u, p);
  const BigInt label = r + 1;
  switch (o.format) {
    case Format::plain: out << label << '\n'; break;
    case Format::csv:
      out << "vertex,order,rank,label\n" << csv_quote(to_text(u)) << ',' << o.order << ',' << r << ',' << label << '\n';
      break;
    case Format::json:
      emit_json(out, json{{"vertex", to_text(u)}, {"order", o.order}, {"rank", r.str()}, {"label", label.str()}});
      break;
  }
  return kOk;
}

inline int cmd_unrank(const Options& o, std::ostream& out) {
  const GridParams p(o.n, o.d);
  if (o.rank.has_value() == o.label.has_value())
    throw std::invalid_argument("unrank needs exactly one of --rank (0-based) or --label (1-based)");
  BigInt r;
  try {
    r = o.rank ? BigInt(*o.rank) : BigInt(*o.label) - 1;
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("rank/label must be a non-negative integer");
  }
  const Vertex u = std::string(order_name(o.order)) == "hales" ? hales_unrank(r, p) : lex_unrank(r, p);
  switch (o.format) {
    case Format::plain: out << to_text(u) << '\n'; break;
    case Format::csv:
      out << "rank,label,vertex\n" << r << ',' << (r + 1) << ',' << csv_quote(to_text(u)) << '\n';
      break;
    case Format::json:
      emit_json(out, json{{"order", o.order}, {"rank", r.str()}, {"label", BigInt(r + 1).str()}, {"vertex", to_text(u)}});
      break;
  }
  return kOk;
}

inline int cmd_bounds(const Options& o, std::ostream& out) {
  const BoundsPair b = bounds(o.n, o.d);
  const BigInt bw = bw_hales(o.n, o.d);
  if (!(b.lower <= bw && bw <= b.upper)) throw InvariantViolation("bandwidth outside its bounds");
  switch (o.format) {
    case Format::plain: out << b.lower << " <= " << bw << " <= " << b.upper << '\n'; break;
    case Format::csv: out << "n,d,lower,bw,upper\n" << o.n << ',' << o.d << ',' << b.lower << ',' << bw << ',' << b.upper << '\n'; break;
    case Format::json:
      emit_json(out, json{{"n", o.n}, {"d", o.d}, {"lower", b.lower.str()}, {"bw", bw.str()}, {"upper", b.upper.str()}});
      break;
  }
  return kOk;
}

inline int cmd_ratio(const Options& o, std::ostream& out) {
  const auto rows = ratio_table(o.n, o.d);
  switch (o.format) {
    case Format::plain:
      for (const auto& r : rows) out << r.d << '\t' << r.hales << '\t' << r.lex << '\t' << plain_real(r.ratio) << '\n';
      break;
    case Format::csv:
      out << "d,bw_hales,bw_lex,ratio\n";
      for (const auto& r : rows) out << r.d << ',' << r.hales << ',' << r.lex << ',' << plain_real(r.ratio) << '\n';
      break;
    case Format::json: {
      json arr = json::array();
      for (const auto& r : rows)
        arr.push_back({{"d", r.d}, {"bw_hales", r.hales.str()}, {"bw_lex", r.lex.str()}, {"ratio", json_real(r.ratio)}});
      emit_json(out, json{{"n", o.n}, {"rows", arr}});
      break;
    }
  }
  return kOk;
}

inline int cmd_estimate(const Options& o, std::ostream& out) {
  const AsymptoticEstimate e = clt_estimate(o.n, o.d);
  const BigInt exact = max_coeff(o.n, o.d + 1);
  const double rel = clt_relative(o.n, o.d);
  switch (o.format) {
    case Format::plain:
      out << "estimate: " << plain_real(e.estimate) << '\n'
          << "exact M(n,d+1): " << exact << '\n'
          << "relative: " << plain_real(rel) << '\n';
      break;
    case Format::csv:
      out << "n,d,estimate,exact,relative\n"
          << o.n << ',' << o.d << ',' << plain_real(e.estimate) << ',' << exact << ',' << plain_real(rel) << '\n';
      break;
    case Format::json:
      emit_json(out, json{{"n", o.n}, {"d", o.d}, {"estimate", json_real(e.estimate)},
                          {"sqrt_factor", json_real(e.sqrt_factor)}, {"exact", exact.str()},
                          {"relative", json_real(rel)}});
      break;
  }
  return kOk;
}

inline int cmd_export_matrix(const Options& o, std::ostream& out) {
  const GridParams p(o.n, o.d);
  if (o.out_path.empty()) throw std::invalid_argument("export-matrix needs --out <path>");
  MatrixKind kind;
  if (o.kind == "adjacency") kind = MatrixKind::adjacency;
  else if (o.kind == "laplacian") kind = MatrixKind::laplacian;
  else throw std::invalid_argument("unknown matrix kind '" + o.kind + "' (expected adjacency or laplacian)");

  const std::uint64_t budget = o.budget.value_or(100'000);
  const Labeling f = labeling_for(o.order, p, budget);
  const SparseSymmetric m = build_matrix(f, kind);
  {
    std::ofstream file(o.out_path);
    if (!file) throw std::runtime_error("cannot write '" + o.out_path + "'");
    write_matrix_market(file, m);
    if (!file) throw std::runtime_error("write to '" + o.out_path + "' failed");
  }

  const std::uint64_t scan = labeling_bandwidth(f, budget).value.convert_to<std::uint64_t>();
  MatrixCheck check;
  if (o.self_test) {
    std::ifstream back(o.out_path);
    check = check_matrix(read_matrix_market(back));
    if (!check.symmetric || (kind == MatrixKind::laplacian && !check.zero_row_sums) ||
        check.half_bandwidth != scan) {
      throw InvariantViolation("exported matrix failed self-test");
    }
  } else {
    check = check_matrix(m);
  }

  switch (o.format) {
    case Format::plain:
      out << "wrote " << o.out_path << ": " << m.dim << "x" << m.dim << ", " << m.lower.size()
          << " stored entries, half-bandwidth " << check.half_bandwidth << '\n';
      if (o.self_test) out << "self-test: ok\n";
      break;
    case Format::csv:
      out << "path,rows,nnz,half_bandwidth\n" << csv_quote(o.out_path) << ',' << m.dim << ',' << m.lower.size() << ','
          << check.half_bandwidth << '\n';
      break;
    case Format::json: {
      json j{{"path", o.out_path}, {"rows", m.dim}, {"nnz", m.lower.size()},
             {"half_bandwidth", check.half_bandwidth}, {"labeling_bandwidth", scan}};
      if (o.self_test) j["self_test"] = "ok";
      emit_json(out, j);
      break;
    }
  }
  return kOk;
}

inline int cmd_verify_optimal(const Options& o, std::ostream& out) {
  const GridParams p(o.n, o.d);
  SearchBudget b;
  if (o.budget) b.max_nodes = *o.budget;
  b.time_limit_seconds = o.time_limit;
  const OptimalityVerification v = verify_optimal(p, b, OracleOptions{!o.no_seed});
  const auto& c = v.certificate;
  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path);
    if (!file) throw std::runtime_error("cannot write '" + o.out_path + "'");
    write_certificate(file, c);
  }
  switch (o.format) {
    case Format::plain:
      out << to_string(v.verdict) << '\n'
          << "formula: " << v.formula_value << '\n'
          << "search: " << c.optimal_value << " (" << to_string(c.status) << ", " << c.nodes_explored << " nodes)\n";
      break;
    case Format::csv:
      out << "n,d,formula,value,status,verdict,nodes\n"
          << o.n << ',' << o.d << ',' << v.formula_value << ',' << c.optimal_value << ','
          << to_string(c.status) << ',' << to_string(v.verdict) << ',' << c.nodes_explored << '\n';
      break;
    case Format::json:
      emit_json(out, json{{"n", o.n}, {"d", o.d}, {"formula", v.formula_value.str()},
                          {"value", c.optimal_value}, {"status", to_string(c.status)},
                          {"verdict", to_string(v.verdict)}, {"nodes", c.nodes_explored}});
      break;
  }
  switch (v.verdict) {
    case Verdict::confirmed: return kOk;
    case Verdict::inconclusive: return kBudget;
    case Verdict::refuted: return kInvariant;
  }
  return kInvariant;
}

/// Runs `command`, mapping library exceptions onto exit codes with a message on `err`.
inline int dispatch(const std::string& command, const Options& o, std::ostream& out, std::ostream& err) {
  try {
    if (command == "coeffs") return cmd_coeffs(o, out);
    if (command == "bw") return cmd_bw(o, out);
    if (command == "table") return cmd_table(o, out);
    if (command == "label") return cmd_label(o, out);
    if (command == "rank") return cmd_rank(o, out);
    if (command == "unrank") return cmd_unrank(o, out);
    if (command == "bounds") return cmd_bounds(o, out);
    if (command == "ratio") return cmd_ratio(o, out);
    if (command == "estimate") return cmd_estimate(o, out);
    if (command == "export-matrix") return cmd_export_matrix(o, out);
    if (command == "verify-optimal") return cmd_verify_optimal(o, out);
    err << "gridband: unknown command '" << command << "'\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "gridband: budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const InvariantViolation& e) {
    err << "gridband: invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::invalid_argument& e) {
    err << "gridband: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "gridband: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "gridband: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace gridband::cli

#endif  // GRIDBAND_TOOLS_COMMANDS_HPP
