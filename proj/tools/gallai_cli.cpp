// gallai: command-line front end. Every subcommand writes JSON (one object
// per input graph) or graph6 lines to standard output.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "gallai/constructions.hpp"
#include "gallai/errors.hpp"
#include "gallai/graph6.hpp"
#include "gallai/invariants.hpp"
#include "gallai/transversal.hpp"
#include "gallai/verify.hpp"

using nlohmann::json;
using namespace gallai;

namespace {

std::vector<std::string> read_lines(const std::string& path) {
  if (path == "-") return read_corpus(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_corpus(in);
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, std::string> out;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw PreconditionError("parameter '" + item + "' is not key=value");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

Objective parse_objective(const std::string& s) {
  if (s == "path") return Objective::LongestPath;
  if (s == "cycle") return Objective::LongestCycle;
  throw PreconditionError("pattern must be path or cycle");
}

json hitting_json(const HittingSet& h) { return {{"value", h.size}, {"witness", h.witness.to_vector()}}; }

json trace_json(const std::vector<IterationEvent>& trace) {
  json out = json::array();
  for (const auto& e : trace)
    out.push_back({{"step", std::string(1, e.step)},
                   {"action", e.action},
                   {"h_order", e.h_order},
                   {"y_size", e.y_size},
                   {"value", e.value}});
  return out;
}

struct GenArgs {
  std::string family;
  int k = 1;
  int t = 2;
  int p = 2;
  int q = 31;
  int count = 1;
  std::vector<int> sizes;
};

Graph generate(const GenArgs& a) {
  const std::string& f = a.family;
  if (f == "petersen") return petersen();
  if (f == "g0") return split_petersen().graph;
  if (f == "g1") return subdivided_split_petersen(a.p, a.q);
  if (f == "g2") return claw_free_split_petersen(a.p, a.q);
  if (f == "complete-bipartite") return complete_bipartite(a.k, a.t);
  if (f == "ktt2-minus-matching") return ktt2_minus_matching(a.t);
  if (f == "example23") return clique_star(a.k, a.t).graph;
  if (f == "disjoint-triangles") return disjoint_triangles(a.t);
  if (f == "triangle-star") return triangle_star(a.t);
  if (f == "linear-forest") return linear_forest(a.sizes);
  if (f == "path") return path_graph(a.t);
  if (f == "cycle") return cycle_graph(a.t);
  if (f == "complete") return complete_graph(a.t);
  throw PreconditionError("unknown family '" + f + "'");
}

template <typename F>
int for_each_graph(const std::string& path, F&& f) {
  int status = 0;
  for (const auto& line : read_lines(path)) {
    json out;
    try {
      out = f(parse_graph6(line));
    } catch (const CapExceeded& e) {
      out = {{"error", "cap-exceeded"}, {"message", e.what()}};
      status = 3;
    } catch (const std::exception& e) {
      out = {{"error", "invalid"}, {"message", e.what()}};
      status = 2;
    }
    out["graph6"] = line;
    std::cout << out.dump() << '\n';
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gallai-vertex and longest-path transversal toolkit"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a named graph as graph6");
  gen_cmd->add_option("family", gen.family,
                      "petersen | g0 | g1 | g2 | complete-bipartite | ktt2-minus-matching | example23 | "
                      "disjoint-triangles | triangle-star | linear-forest | path | cycle | complete")
      ->required();
  gen_cmd->add_option("--k", gen.k, "clique size / first part size");
  gen_cmd->add_option("--t", gen.t, "clique size / part size / order / triangle count");
  gen_cmd->add_option("--p", gen.p, "subdivision length of ordinary edges");
  gen_cmd->add_option("--q", gen.q, "subdivision length of pendant edges");
  gen_cmd->add_option("--count", gen.count, "number of copies to emit");
  gen_cmd->add_option("--sizes", gen.sizes, "component orders for linear-forest")->delimiter(',');

  std::string input;
  auto* lpt_cmd = app.add_subcommand("lpt", "Exact longest-path transversal number");
  lpt_cmd->add_option("file", input, "graph6 file ('-' for stdin)")->required();
  auto* lct_cmd = app.add_subcommand("lct", "Exact longest-cycle transversal number");
  lct_cmd->add_option("file", input, "graph6 file ('-' for stdin)")->required();
  auto* gallai_cmd = app.add_subcommand("gallai", "Vertices on every longest path");
  gallai_cmd->add_option("file", input, "graph6 file ('-' for stdin)")->required();

  std::string pattern = "path";
  std::string algo = "exact";
  std::optional<double> epsilon;
  bool strict = false;
  auto* tr_cmd = app.add_subcommand("transversal", "Transversal of longest paths or cycles");
  tr_cmd->add_option("--pattern", pattern)->check(CLI::IsMember({"path", "cycle"}));
  tr_cmd->add_option("--algo", algo)->check(CLI::IsMember({"exact", "theorem1"}));
  tr_cmd->add_option("--epsilon", epsilon, "override epsilon (theorem1 only)");
  tr_cmd->add_flag("--strict", strict, "fail on the unreachable branch instead of falling back");
  tr_cmd->add_option("file", input, "graph6 file ('-' for stdin)")->required();

  std::string check;
  std::vector<std::string> params;
  std::string filters;
  std::string corpus;
  int jobs = 1;
  long long budget_ms = 0;
  std::string out_path;
  std::string csv_path;
  bool all_records = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run a check over a graph6 corpus");
  verify_cmd->add_option("--check", check)->required()->check(CLI::IsMember(check_tags()));
  verify_cmd->add_option("--param", params, "key=value");
  verify_cmd->add_option("--filter", filters, "comma-separated: connected,kappa>=k,alpha<=c,free=<g6>,n<=N");
  verify_cmd->add_option("--corpus", corpus)->required();
  verify_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--budget-ms", budget_ms, "per-graph time budget");
  verify_cmd->add_option("--out", out_path, "JSON report path (default stdout)");
  verify_cmd->add_option("--csv", csv_path, "CSV report path");
  verify_cmd->add_flag("--all-records", all_records, "include passing and skipped records in JSON");

  std::string graph6;
  auto* check_cmd = app.add_subcommand("check", "Run a check on one graph6 string");
  check_cmd->add_option("--check", check)->required()->check(CLI::IsMember(check_tags()));
  check_cmd->add_option("--param", params, "key=value");
  check_cmd->add_option("--filter", filters);
  check_cmd->add_option("graph6", graph6)->required();

  auto* r25_cmd = app.add_subcommand("remark25", "Induced linear forests of the split Petersen graph");

  std::string forbidden;
  auto* q24_cmd = app.add_subcommand("question24", "Search connected H-free graphs for one without a Gallai vertex");
  q24_cmd->add_option("--free", forbidden, "H as graph6 (a linear forest)")->required();
  q24_cmd->add_option("--corpus", corpus)->required();
  q24_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  q24_cmd->add_option("--budget-ms", budget_ms);
  q24_cmd->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) {
      const std::string g6 = to_graph6(generate(gen));
      for (int i = 0; i < gen.count; ++i) std::cout << g6 << '\n';
      return 0;
    }
    if (*lpt_cmd) return for_each_graph(input, [](const Graph& g) { return hitting_json(lpt_exact(g)); });
    if (*lct_cmd) return for_each_graph(input, [](const Graph& g) { return hitting_json(lct_exact(g)); });
    if (*gallai_cmd)
      return for_each_graph(input, [](const Graph& g) {
        const VertexSet s = gallai_vertices(g);
        return json{{"value", s.size()}, {"witness", s.to_vector()}};
      });
    if (*tr_cmd) {
      const Objective objective = parse_objective(pattern);
      return for_each_graph(input, [&](const Graph& g) {
        if (algo == "exact") {
          json out = hitting_json(objective == Objective::LongestPath ? lpt_exact(g) : lct_exact(g));
          out["algo"] = "exact";
          return out;
        }
        const SublinearResult r = sublinear_transversal(g, objective, {epsilon, strict});
        json out = {{"algo", "theorem1"},
                    {"value", r.transversal.size()},
                    {"witness", r.transversal.to_vector()},
                    {"valid", validate_transversal(g, objective, r.transversal)},
                    {"bound", r.bound},
                    {"optimum", r.optimum},
                    {"epsilon4", r.epsilon4},
                    {"trace", trace_json(r.trace)}};
        if (r.diagnostic) out["diagnostic"] = *r.diagnostic;
        return out;
      });
    }
    if (*verify_cmd || *q24_cmd) {
      CampaignOptions options;
      options.jobs = jobs;
      if (budget_ms > 0) options.budget = std::chrono::milliseconds(budget_ms);
      const auto lines = read_lines(corpus);
      const CampaignReport report =
          *verify_cmd ? run_campaign(lines, corpus, make_check(check, parse_params(params)), parse_filters(filters),
                                     options)
                      : free_family_scan(lines, corpus, parse_graph6(forbidden), options);
      const std::string text = report.to_json(all_records).dump(2);
      if (out_path.empty()) {
        std::cout << text << '\n';
      } else {
        std::ofstream(out_path) << text << '\n';
        std::cout << json{{"totals", report.totals}, {"out", out_path}}.dump() << '\n';
      }
      if (!csv_path.empty()) std::ofstream(csv_path) << report.to_csv();
      if (*q24_cmd && !report.failures().empty())
        std::cerr << "COUNTEREXAMPLE FOUND: " << report.failures().front()->graph6 << '\n';
      return report.failures().empty() ? 0 : 1;
    }
    if (*check_cmd) {
      const CampaignReport report =
          run_campaign({graph6}, "argv", make_check(check, parse_params(params)), parse_filters(filters));
      const RecordResult& r = report.records.front();
      json out = {{"graph6", r.graph6}, {"n", r.n}, {"verdict", verdict_name(r.verdict)}, {"metrics", r.metrics}};
      if (!r.reason.empty()) out["reason"] = r.reason;
      if (!r.diagnostic.is_null()) out["diagnostic"] = r.diagnostic;
      std::cout << out.dump() << '\n';
      return r.verdict == Verdict::Fail ? 1 : 0;
    }
    if (*r25_cmd) {
      const SplitPetersen g0 = split_petersen();
      const LinearForestSurvey s = induced_linear_forests(g0.graph);
      json classes = json::object();
      for (const auto& [order, types] : s.classes) classes[std::to_string(order)] = types;
      const std::set<std::vector<int>> expected = {{3, 3, 3}, {7, 1, 1}};
      const auto nine = s.classes.find(9);
      const bool ok = s.max_order == 9 && nine != s.classes.end() && nine->second == expected;
      std::cout << json{{"max_order", s.max_order}, {"classes", classes}, {"matches", ok}}.dump() << '\n';
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
