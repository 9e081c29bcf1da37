// gridband: bandwidth of products of paths P_n^d.

#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv) {
  using gridband::cli::Format;
  gridband::cli::Options opt;

  CLI::App app{"Bandwidth of d-fold products of paths P_n^d"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{
      {"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}};

  auto common = [&](CLI::App* sub, bool needs_grid = true) {
    auto* n = sub->add_option("--n", opt.n, "path edge count n (>= 1)");
    auto* d = sub->add_option("--d", opt.d, "dimension d");
    if (needs_grid) {
      n->required();
      d->required();
    }
    sub->add_option("--format", opt.format, "plain, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    return sub;
  };

  common(app.add_subcommand("coeffs", "coefficients of (1 + x + ... + x^n)^d"));

  auto* bw = common(app.add_subcommand("bw", "bandwidth of P_n^d"));
  bw->add_option("--method", opt.method, "formula, hales-scan, lex or brute");
  bw->add_option("--labeling", opt.labeling_path, "edge-scan an explicit labeling file");
  bw->add_option("--budget", opt.budget, "vertex budget for scans, node budget for brute");
  bw->add_option("--time-limit", opt.time_limit, "seconds, brute only");
  bw->add_flag("--no-seed", opt.no_seed, "brute: do not seed the search with the formula value");

  common(app.add_subcommand("table", "bandwidth table for n = 1..--n, d = 1..--d"));

  auto* label = common(app.add_subcommand("label", "list a full labeling"));
  label->add_option("--order", opt.order, "hales or lex");
  label->add_option("--budget", opt.budget, "maximum number of lines (default 100000)");

  auto* rank = common(app.add_subcommand("rank", "1-based label of a vertex"));
  rank->add_option("--order", opt.order, "hales or lex");
  rank->add_option("--vertex", opt.vertex, "comma-separated coordinates, e.g. 1,0,2")->required();

  auto* unrank = common(app.add_subcommand("unrank", "vertex at a rank or label"));
  unrank->add_option("--order", opt.order, "hales or lex");
  unrank->add_option("--rank", opt.rank, "0-based rank");
  unrank->add_option("--label", opt.label, "1-based label");

  common(app.add_subcommand("bounds", "M(n,d) <= bw <= M(n,d+1)"));
  common(app.add_subcommand("ratio", "bw_hales / bw_lex for d = 1..--d"));
  common(app.add_subcommand("estimate", "Gaussian estimate of M(n,d+1)"));

  auto* exp = common(app.add_subcommand("export-matrix", "write the reordered adjacency or Laplacian"));
  exp->add_option("--order", opt.order, "hales or lex");
  exp->add_option("--kind", opt.kind, "adjacency or laplacian");
  exp->add_option("--out", opt.out_path, "Matrix Market output path")->required();
  exp->add_option("--budget", opt.budget, "maximum vertex count (default 100000)");
  exp->add_flag("--self-test", opt.self_test, "re-read the file and check symmetry, row sums, bandwidth");

  auto* ver = common(app.add_subcommand("verify-optimal", "exhaustive search against the formula"));
  ver->add_option("--budget", opt.budget, "search-node budget (default 1e8)");
  ver->add_option("--time-limit", opt.time_limit, "seconds");
  ver->add_option("--out", opt.out_path, "write the optimality certificate here");
  ver->add_flag("--no-seed", opt.no_seed, "do not seed the search with the formula value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : gridband::cli::kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  return gridband::cli::dispatch(command, opt, std::cout, std::cerr);
}
