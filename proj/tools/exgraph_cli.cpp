// Command-line front end: formulas, constructions, graph analysis,
// exhaustive theorem verification, local search, and H-free reports.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/capacity error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "exgraph/fixtures.hpp"
#include "exgraph/formulas.hpp"
#include "exgraph/graph.hpp"
#include "exgraph/hfree.hpp"
#include "exgraph/invariants.hpp"
#include "exgraph/oracle.hpp"
#include "exgraph/symmetrize.hpp"

namespace {

using nlohmann::json;

exgraph::Graph load_graph(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return exgraph::parse_graph(buf.str());
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return exgraph::parse_graph(buf.str());
}

exgraph::Graph load_pattern(const std::string& spec) {
  try {
    return exgraph::fixture_by_name(spec);
  } catch (const std::invalid_argument&) {
    return load_graph(spec);
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int cmd_formula(long long n, long long k, long long s) {
  exgraph::ExtremalResult r = exgraph::ex_edges(n, k, s);
  json out = {{"n", r.n},
              {"k", r.k},
              {"s", r.s},
              {"turan_branch", r.turan_branch},
              {"gks_branch", r.gks_branch},
              {"value", r.value},
              {"winner", exgraph::to_string(r.winner)}};
  std::cout << out.dump() << '\n';
  return 0;
}

int cmd_construct(const std::string& kind, int n, int k, int s,
                  const std::string& out_path) {
  exgraph::Graph g = kind == "turan" ? exgraph::make_turan(n, k).first
                                     : exgraph::make_gks(n, k, s).first;
  write_text(out_path, exgraph::write_graph(g));
  return 0;
}

int cmd_analyze(const std::string& in_path) {
  exgraph::Graph g = load_graph(in_path);
  json out;
  json notes = json::array();
  out["n"] = g.n;
  out["m"] = g.m;

  if (g.n <= 128) {
    auto [omega, witness] = exgraph::clique_number(g);
    out["clique_number"] = omega;
    out["clique_witness"] = witness;
  } else {
    out["clique_number"] = nullptr;
    notes.push_back("clique_number skipped: n > 128");
  }

  auto [nu, matching] = exgraph::matching_number(g);
  out["matching_number"] = nu;
  json pairs = json::array();
  for (auto [u, v] : matching.pairs) pairs.push_back({u, v});
  out["matching"] = pairs;

  if (g.n <= 16) {
    exgraph::TutteBergeWitness tb = exgraph::tutte_berge_max_deficiency(g);
    out["tutte_berge"] = {
        {"B", tb.B}, {"odd_components", tb.odd_components}, {"bound", tb.bound}};
  } else {
    out["tutte_berge"] = nullptr;
    notes.push_back("tutte_berge skipped: n > 16");
  }

  if (g.n <= 512) {
    exgraph::GallaiEdmonds ge = exgraph::gallai_edmonds(g);
    out["gallai_edmonds"] = {{"D", ge.D}, {"A", ge.A}, {"C", ge.C}};
  } else {
    out["gallai_edmonds"] = nullptr;
    notes.push_back("gallai_edmonds skipped: n > 512");
  }

  out["notes"] = notes;
  std::cout << out.dump() << '\n';
  return 0;
}

int cmd_verify(int max_n, int threads, const std::string& csv_path) {
  exgraph::TheoremReport report = exgraph::verify_theorem(max_n, threads);
  if (!csv_path.empty()) write_text(csv_path, exgraph::theorem_csv(report));
  int failures = 0;
  for (const auto& c : report.cells)
    if (!c.ok) ++failures;
  std::cout << (report.pass ? "PASS" : "FAIL") << ": " << report.cells.size()
            << " cells checked, " << failures << " mismatches (max n = " << max_n
            << ")\n";
  if (!report.pass) {
    for (const auto& c : report.cells) {
      if (c.ok) continue;
      std::cout << "counterexample cell n=" << c.n << " k=" << c.k
                << " s=" << c.s << " oracle=" << c.oracle_value
                << " formula=" << c.formula.value << "\n";
      std::cout << exgraph::write_graph(
          exgraph::graph_from_edge_mask(c.n, c.witness));
    }
  }
  return report.pass ? 0 : 1;
}

int cmd_search(int n, int k, int s, std::uint64_t seed, int iters, int restarts,
               const std::string& out_path) {
  long long formula = exgraph::ex_edges(n, k, s).value;
  exgraph::SearchResult result =
      exgraph::local_search(n, k, s, seed, iters, restarts, formula);
  std::cout << exgraph::search_csv(result, formula);
  std::string graph_text = exgraph::write_graph(result.best.graph);
  if (out_path.empty())
    std::cout << graph_text;
  else
    write_text(out_path, graph_text);
  return 0;
}

int cmd_hfree(const std::string& h_spec, int n, int s) {
  exgraph::Graph h = load_pattern(h_spec);
  exgraph::ForbiddenPattern pattern = exgraph::make_pattern(h);
  if (!pattern.critical || pattern.chi <= 2) {
    std::cerr << "error: H is not color-critical with chromatic number > 2\n";
    return 2;
  }
  exgraph::PropositionReport report = exgraph::verify_proposition(h, n, s);
  json out = {{"h_vertices", h.n},
              {"h_edges", h.m},
              {"chi", report.chi},
              {"critical_edge",
               {pattern.critical_edge->first, pattern.critical_edge->second}},
              {"n", report.n},
              {"s", report.s},
              {"oracle_value", report.oracle_value},
              {"g_value", report.g_value},
              {"status", exgraph::to_string(report.status)}};
  std::cout << out.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extremal graphs with bounded clique and matching number"};
  app.require_subcommand(1);

  long long fn = 0, fk = 1, fs = 0;
  auto* formula = app.add_subcommand("formula", "evaluate the extremal edge count");
  formula->add_option("--n", fn, "vertex count")->required();
  formula->add_option("--k", fk, "clique bound")->required();
  formula->add_option("--s", fs, "matching bound")->required();

  std::string ckind, cout_path;
  int cn = 0, ck = 1, cs = 0;
  auto* construct = app.add_subcommand("construct", "emit an extremal construction");
  construct->add_option("kind", ckind, "turan or gks")
      ->required()
      ->check(CLI::IsMember({"turan", "gks"}));
  construct->add_option("--n", cn)->required();
  construct->add_option("--k", ck)->required();
  construct->add_option("--s", cs);
  construct->add_option("--out", cout_path, "output path (default stdout)");

  std::string ain;
  auto* analyze = app.add_subcommand("analyze", "invariants of an edge-list graph");
  analyze->add_option("--in", ain, "input path, or - for stdin")->required();

  int vmax = 0, vthreads = 1;
  std::string vcsv;
  auto* verify = app.add_subcommand("verify", "exhaustive theorem check");
  verify->add_option("--max-n", vmax)->required();
  verify->add_option("--threads", vthreads);
  verify->add_option("--csv", vcsv, "write the per-cell CSV here");

  int sn = 0, sk = 1, ss = 0, siters = 200, srestarts = 50;
  std::uint64_t sseed = 1;
  std::string sout;
  auto* search = app.add_subcommand("search", "local search for extremal graphs");
  search->add_option("--n", sn)->required();
  search->add_option("--k", sk)->required();
  search->add_option("--s", ss)->required();
  search->add_option("--seed", sseed);
  search->add_option("--iters", siters);
  search->add_option("--restarts", srestarts);
  search->add_option("--out", sout, "write the best graph here");

  std::string hh;
  int hn = 0, hs = 0;
  auto* hfree = app.add_subcommand("hfree", "color-critical H-free report");
  hfree->set_help_flag("--help", "print help");  // frees -h for the pattern flag
  hfree->add_option("--h", hh, "fixture name (K3, C5, ...) or edge-list path")
      ->required();
  hfree->add_option("--n", hn)->required();
  hfree->add_option("--s", hs)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (*formula) return cmd_formula(fn, fk, fs);
    if (*construct) return cmd_construct(ckind, cn, ck, cs, cout_path);
    if (*analyze) return cmd_analyze(ain);
    if (*verify) return cmd_verify(vmax, vthreads, vcsv);
    if (*search) return cmd_search(sn, sk, ss, sseed, siters, srestarts, sout);
    if (*hfree) return cmd_hfree(hh, hn, hs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
