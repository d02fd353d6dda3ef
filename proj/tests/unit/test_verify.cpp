#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gallai/constructions.hpp"
#include "gallai/errors.hpp"
#include "gallai/graph6.hpp"
#include "gallai/invariants.hpp"
#include "gallai/verify.hpp"

using namespace gallai;

namespace {

Verdict verdict(const Graph& g, const std::string& tag, const std::map<std::string, std::string>& params = {}) {
  return run_check(g, make_check(tag, params)).verdict;
}

std::vector<std::string> corpus(const std::string& name, std::size_t limit) {
  const char* dir = std::getenv("GALLAI_CORPUS_DIR");
  if (!dir) return {};
  std::ifstream in(std::string(dir) + "/" + name + ".g6");
  auto lines = read_corpus(in);
  if (lines.size() > limit) lines.resize(limit);
  return lines;
}

}  // namespace

TEST_CASE("check specs") {
  CHECK(check_tags().size() == 13);
  CHECK(make_check("thm13", {{"k", "2"}}).k == 2);
  CHECK(make_check("thm1-bound", {{"pattern", "cycle"}}).objective == Objective::LongestCycle);
  CHECK(make_check("thm22-claim", {{"k", "1"}, {"n0", "5"}}).n0 == 5);
  CHECK_THROWS_AS(make_check("nope"), PreconditionError);
  CHECK_THROWS_AS(make_check("thm13", {{"k", "3"}}), PreconditionError);
  CHECK_THROWS_AS(make_check("thm13", {{"k", "x"}}), PreconditionError);
  CHECK_THROWS_AS(make_check("lemma3", {{"q", "1"}}), PreconditionError);
  CHECK(std::string(verdict_name(Verdict::Skipped)) == "skipped-by-filter");
  CHECK(std::string(verdict_name(Verdict::CapExceeded)) == "cap-exceeded");
}

TEST_CASE("gallai existence") {
  const auto out = run_check(split_petersen().graph, make_check("gallai-exists"));
  CHECK(out.verdict == Verdict::Fail);
  REQUIRE(out.diagnostic.contains("avoiding_paths"));
  // Every vertex is avoided by some longest path, shown explicitly.
  for (int v = 0; v < 12; ++v) {
    const auto& p = out.diagnostic["avoiding_paths"][std::to_string(v)];
    REQUIRE(p.is_array());
    CHECK(p.size() == 10);
    for (const auto& u : p) CHECK(u.get<int>() != v);
  }
  CHECK(verdict(petersen(), "gallai-exists") == Verdict::Pass);
  CHECK(verdict(disjoint_triangles(2), "gallai-exists") == Verdict::Skipped);
  CHECK(verdict(subdivided_split_petersen(2, 31), "gallai-exists") == Verdict::Fail);
}

TEST_CASE("degree conditions") {
  CHECK(verdict(complete_bipartite(2, 4), "thm9") == Verdict::Pass);
  CHECK(verdict(petersen(), "thm9") == Verdict::Skipped);
  CHECK(verdict(ktt2_minus_matching(3), "prop10") == Verdict::Pass);
  CHECK(verdict(petersen(), "thm13", {{"k", "2"}}) == Verdict::Pass);
  CHECK(verdict(petersen(), "thm13", {{"k", "1"}}) == Verdict::Skipped);
  CHECK(verdict(cycle_graph(9), "thm13", {{"k", "2"}}) == Verdict::Pass);
  CHECK(verdict(path_graph(5), "thm13", {{"k", "2"}}) == Verdict::Skipped);
  CHECK(verdict(petersen(), "thm20") == Verdict::Pass);
  CHECK(verdict(split_petersen().graph, "thm20") == Verdict::Skipped);
  // The degree-2 vertices of K_{2,4} are not on every longest path, so the
  // max-degree-minus-one form fails once its hypothesis is dropped.
  const auto out = run_check(complete_bipartite(2, 4), make_check("thm13", {{"k", "1"}}));
  CHECK(out.verdict == Verdict::Skipped);
  CHECK(verdict(complete_bipartite(2, 4), "gallai-max-degree") == Verdict::Pass);
  CHECK(verdict(ktt2_minus_matching(3), "gallai-max-degree") == Verdict::Pass);
}

TEST_CASE("clique star against the large-order claim") {
  const Graph g = clique_star(1, 5).graph;
  CHECK(g.order() == 16);
  CHECK(alpha(g) == 4);
  const auto out = run_check(g, make_check("thm22-claim", {{"k", "1"}}));
  CHECK(out.verdict == Verdict::Skipped);
  CHECK(out.reason == "alpha > k + 2");
  CHECK(verdict(petersen(), "thm22-claim", {{"k", "1"}}) == Verdict::Skipped);
  CHECK(verdict(petersen(), "thm22-claim", {{"k", "2"}, {"n0", "10"}}) == Verdict::Pass);
}

TEST_CASE("hamiltonicity checks") {
  CHECK(verdict(complete_graph(4), "chvatal-erdos") == Verdict::Pass);
  CHECK(verdict(petersen(), "chvatal-erdos") == Verdict::Pass);
  CHECK(verdict(cycle_graph(5), "chvatal-erdos") == Verdict::Pass);
  CHECK(verdict(complete_bipartite(2, 5), "chvatal-erdos") == Verdict::Skipped);
  CHECK(verdict(cycle_graph(6), "cor14") == Verdict::Pass);
  CHECK(verdict(complete_bipartite(3, 3), "cor14") == Verdict::Pass);
  CHECK(verdict(complete_bipartite(1, 5), "cor14") == Verdict::Skipped);
}

TEST_CASE("block, subdivision and transversal checks") {
  CHECK(verdict(path_graph(6), "lemma18") == Verdict::Skipped);  // cut vertices are Gallai
  CHECK(verdict(split_petersen().graph, "lemma18") == Verdict::Pass);
  CHECK(verdict(petersen(), "lemma3", {{"m", "1"}}) == Verdict::Pass);
  CHECK(verdict(complete_graph(6), "lemma3", {{"m", "2"}}) == Verdict::Pass);
  CHECK(verdict(cycle_graph(6), "lemma3", {{"m", "1"}}) == Verdict::Pass);
  CHECK(verdict(path_graph(6), "lemma3", {{"m", "1"}}) == Verdict::Skipped);

  const auto g0 = run_check(split_petersen().graph, make_check("thm1-bound"));
  CHECK(g0.verdict == Verdict::Pass);
  CHECK(g0.metrics["lpt"] == 2);
  const auto pc = run_check(petersen(), make_check("thm1-bound", {{"pattern", "cycle"}}));
  CHECK(pc.verdict == Verdict::Pass);
  CHECK(pc.metrics["lct"] == 2);
  const auto p20 = run_check(path_graph(20), make_check("thm1-bound"));
  CHECK(p20.verdict == Verdict::Pass);
  CHECK(p20.metrics["lpt"] == 1);

  CHECK(verdict(disjoint_triangles(3), "lct-thomassen") == Verdict::Pass);
  CHECK(verdict(path_graph(5), "lct-thomassen") == Verdict::Skipped);
}

TEST_CASE("filters") {
  const auto fs = parse_filters("connected,kappa>=2,alpha<=4,free=Bg,n<=9");
  REQUIRE(fs.size() == 5);
  CHECK(fs[0].accepts(petersen()));
  CHECK(fs[1].accepts(petersen()));
  CHECK(fs[2].accepts(petersen()));
  CHECK_FALSE(fs[3].accepts(petersen()));
  CHECK(fs[3].accepts(complete_graph(5)));
  CHECK_FALSE(fs[4].accepts(petersen()));
  CHECK_THROWS_AS(Filter::parse("girth>=3"), PreconditionError);
  CHECK_THROWS_AS(Filter::parse("alpha<=x"), PreconditionError);
}

TEST_CASE("campaign records") {
  const std::vector<std::string> lines = {to_graph6(petersen()), "not-graph6", to_graph6(split_petersen().graph),
                                          to_graph6(disjoint_triangles(2))};
  const auto report = run_campaign(lines, "mixed", make_check("gallai-exists"), parse_filters("connected"));
  REQUIRE(report.records.size() == 4);
  CHECK(report.records[0].verdict == Verdict::Pass);
  CHECK(report.records[1].verdict == Verdict::Error);
  CHECK(report.records[2].verdict == Verdict::Fail);
  CHECK(report.records[3].verdict == Verdict::Skipped);
  CHECK(report.records[3].reason == "filter connected");
  CHECK(report.totals.at("total") == 4);
  CHECK(report.count(Verdict::Fail) == 1);
  REQUIRE(report.failures().size() == 1);
  CHECK(report.failures()[0]->graph6 == lines[2]);

  const auto json = report.to_json(false);
  CHECK(json["counterexamples"].size() == 1);
  CHECK_FALSE(json.contains("records"));
  CHECK(report.to_json(true)["records"].size() == 4);

  std::istringstream csv(report.to_csv());
  std::string header;
  std::getline(csv, header);
  CHECK(header == "index,n,verdict,lpt,lct,longest_path");
  int rows = 0;
  for (std::string row; std::getline(csv, row);) ++rows;
  CHECK(rows == 4);
}

TEST_CASE("time budget yields cap-exceeded") {
  const std::vector<std::string> lines = {to_graph6(complete_graph(40))};
  CampaignOptions options;
  options.budget = std::chrono::milliseconds(5);
  const auto report = run_campaign(lines, "k40", make_check("gallai-exists"), {}, options);
  CHECK(report.records[0].verdict == Verdict::CapExceeded);
}

TEST_CASE("corpus reading skips blank lines and header records") {
  std::istringstream in(">>graph6<<Bw\r\n\nC~\n");
  const auto lines = read_corpus(in);
  REQUIRE(lines.size() == 2);
  CHECK(parse_graph6(lines[0]).order() == 3);
}

TEST_CASE("reports do not depend on the worker count") {
  auto lines = corpus("conn_le8", 3000);
  if (lines.empty()) {
    for (int n = 3; n < 9; ++n) lines.push_back(to_graph6(cycle_graph(n)));
  }
  const auto spec = make_check("thm1-bound");
  CampaignOptions one;
  CampaignOptions many;
  many.jobs = 4;
  const auto a = run_campaign(lines, "c", spec, {}, one).to_json(true);
  auto b = run_campaign(lines, "c", spec, {}, many).to_json(true);
  auto a_records = a["records"];
  CHECK(a_records == b["records"]);
  CHECK(a["totals"] == b["totals"]);
}

TEST_CASE("free-family scan") {
  const std::vector<std::string> lines = {to_graph6(split_petersen().graph), to_graph6(petersen())};
  // 5P1 is not induced in the Petersen graph, but is in the split graph.
  const auto r = free_family_scan(lines, "two", linear_forest({1, 1, 1, 1, 1}));
  CHECK(r.records[0].verdict == Verdict::Skipped);
  CHECK(r.records[1].verdict == Verdict::Pass);
  // Split Petersen itself is (K3)-free but K3 is not a linear forest.
  CHECK_THROWS_AS(free_family_scan(lines, "two", complete_graph(3)), PreconditionError);
  // 7P1 is not induced in it (alpha = 6): it is a genuine counterexample hit.
  const auto hit = free_family_scan(lines, "two", linear_forest({1, 1, 1, 1, 1, 1, 1}));
  CHECK(hit.count(Verdict::Fail) == 1);
}

TEST_CASE("induced linear forests of the split petersen graph") {
  const auto s = induced_linear_forests(split_petersen().graph);
  CHECK(s.max_order == 9);
  CHECK(s.classes.at(9) == std::set<std::vector<int>>{{3, 3, 3}, {7, 1, 1}});
  CHECK(s.classes.at(5).count({1, 1, 1, 1, 1}) == 1);
}
