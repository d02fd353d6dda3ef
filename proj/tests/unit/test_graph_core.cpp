#include <doctest.h>

#include <random>

#include "gallai/blocks.hpp"
#include "gallai/constructions.hpp"
#include "gallai/errors.hpp"
#include "gallai/flow.hpp"
#include "gallai/graph6.hpp"
#include "gallai/induced.hpp"
#include "gallai/invariants.hpp"
#include "oracles.hpp"

using namespace gallai;

namespace {

Graph bowtie() {
  Graph g(5);
  for (auto [u, v] : std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}) g.add_edge(u, v);
  return g;
}

Graph claw() { return complete_bipartite(1, 3); }

bool same(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  for (int u = 0; u < a.order(); ++u)
    if (a.neighbors(u) != b.neighbors(u)) return false;
  return true;
}

}  // namespace

TEST_CASE("vertex sets") {
  VertexSet s{3, 70, 200};
  CHECK(s.size() == 3);
  CHECK(s.contains(70));
  CHECK_FALSE(s.contains(71));
  CHECK(s.first() == 3);
  CHECK(s.to_vector() == std::vector<int>{3, 70, 200});
  s.erase(70);
  CHECK(s.to_vector() == std::vector<int>{3, 200});
  CHECK((VertexSet::range(5) - VertexSet{1, 3}).to_vector() == std::vector<int>{0, 2, 4});
  CHECK(lex_less(VertexSet{0, 5}, VertexSet{1, 2}));
  CHECK(lex_less(VertexSet{0, 1}, VertexSet{0, 2}));
  CHECK(VertexSet{1, 2}.is_subset_of(VertexSet{0, 1, 2}));
  CHECK_FALSE(VertexSet{1, 2}.intersects(VertexSet{0, 3}));
}

TEST_CASE("graph basics") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(g.adjacent(1, 0));
  CHECK(g.degree(1) == 2);
  CHECK(g.max_degree() == 2);
  CHECK(g.min_degree() == 0);
  CHECK(g.edges().size() == 2);
  CHECK_THROWS_AS(g.add_edge(2, 2), PreconditionError);
  std::vector<int> labels;
  Graph h = g.induced(VertexSet{1, 2, 3}, &labels);
  CHECK(h.order() == 3);
  CHECK(labels == std::vector<int>{1, 2, 3});
  CHECK(h.adjacent(0, 1));
  CHECK(complement(g).edges().size() == 4);
  CHECK(disjoint_union(g, g).order() == 8);
}

TEST_CASE("graph6 hand encodings") {
  const Graph k4 = parse_graph6("C~");
  CHECK(k4.order() == 4);
  CHECK(k4.edges().size() == 6);
  CHECK(parse_graph6("@").order() == 1);
  CHECK(parse_graph6("@").edges().empty());
  CHECK(same(parse_graph6("Bw"), complete_graph(3)));
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(path_graph(3)) == "Bg");
  CHECK(same(parse_graph6(">>graph6<<Bg\n"), path_graph(3)));
}

TEST_CASE("graph6 errors") {
  CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("C"), Graph6Error);       // truncated
  CHECK_THROWS_AS(parse_graph6("Bx"), Graph6Error);      // nonzero padding
  CHECK_THROWS_AS(parse_graph6("C~~"), Graph6Error);     // trailing bytes
  CHECK_THROWS_AS(parse_graph6("C\x01"), Graph6Error);   // byte out of range
  CHECK_THROWS_AS(parse_graph6(":Bc"), UnsupportedFormatError);
  CHECK_THROWS_AS(parse_graph6("&B?"), UnsupportedFormatError);
  try {
    parse_graph6("C~~");
  } catch (const Graph6Error& e) {
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("graph6 roundtrip against an independent encoder") {
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + i % 62;
    const Graph g = oracle::random_graph(rng, n, 0.3);
    const std::string text = to_graph6(g);
    CHECK(text == oracle::graph6(g));
    CHECK(same(parse_graph6(text), g));
  }
  // Long form of the order (n >= 63).
  const Graph big = oracle::random_graph(rng, 130, 0.05);
  const std::string text = to_graph6(big);
  CHECK(text[0] == '~');
  CHECK(same(parse_graph6(text), big));
}

TEST_CASE("components and connectivity") {
  CHECK(components(Graph(1)).size() == 1);
  const auto two = components(disjoint_triangles(2));
  REQUIRE(two.size() == 2);
  CHECK(two[0].size() == 3);
  CHECK(two[1].to_vector() == std::vector<int>{3, 4, 5});
  CHECK(components(split_petersen().graph).size() == 1);
  CHECK(is_connected(petersen()));
  CHECK_FALSE(is_connected(disjoint_triangles(2)));
  CHECK(reachable(path_graph(5), 0, VertexSet{0, 1, 3, 4}).to_vector() == std::vector<int>{0, 1});
}

TEST_CASE("independence number") {
  CHECK(alpha(complete_graph(6)) == 1);
  CHECK(alpha(split_petersen().graph) == 6);
  CHECK(alpha(petersen()) == 4);
  CHECK(alpha(Graph(5)) == 5);
  const Graph p = petersen();
  const VertexSet mis = maximum_independent_set(p);
  CHECK(mis.size() == 4);
  for (int u : mis)
    for (int v : mis) CHECK_FALSE(p.adjacent(u, v));
}

TEST_CASE("vertex connectivity") {
  CHECK(kappa(path_graph(5)) == 1);
  CHECK(kappa(complete_graph(5)) == 4);
  CHECK(kappa(petersen()) == 3);
  CHECK(kappa(disjoint_triangles(2)) == 0);
  CHECK(kappa(Graph(1)) == 0);
  CHECK(kappa(cycle_graph(7)) == 2);
  CHECK(local_connectivity(petersen(), 0, 1) == 3);
}

TEST_CASE("alpha and kappa agree with brute force") {
  std::mt19937 rng(11);
  for (int i = 0; i < 400; ++i) {
    const int n = 1 + i % 9;
    const Graph g = oracle::random_graph(rng, n, 0.2 + 0.6 * (i % 5) / 4.0);
    CHECK(alpha(g) == oracle::alpha(g));
    CHECK(kappa(g) == oracle::kappa(g));
    if (g.edges().size() < static_cast<std::size_t>(n * (n - 1) / 2)) CHECK(kappa(g) <= g.min_degree());
  }
}

TEST_CASE("girth") {
  CHECK(girth(complete_graph(3)) == 3);
  CHECK_FALSE(girth(path_graph(6)).has_value());
  CHECK(girth(petersen()) == 5);
  const auto g1 = girth(subdivided_split_petersen(2, 31));
  REQUIRE(g1.has_value());
  CHECK(*g1 > 9);
  CHECK(*g1 == 10);
}

TEST_CASE("block decomposition") {
  auto p3 = blocks(path_graph(3));
  REQUIRE(p3.blocks.size() == 2);
  CHECK(p3.blocks[0].to_vector() == std::vector<int>{0, 1});
  CHECK(p3.blocks[1].to_vector() == std::vector<int>{1, 2});
  CHECK(p3.cut_vertices.to_vector() == std::vector<int>{1});

  auto bt = blocks(bowtie());
  REQUIRE(bt.blocks.size() == 2);
  CHECK(bt.blocks[0].size() == 3);
  CHECK(bt.blocks[1].size() == 3);
  CHECK(bt.cut_vertices.to_vector() == std::vector<int>{2});

  auto pet = blocks(petersen());
  CHECK(pet.blocks.size() == 1);
  CHECK(pet.cut_vertices.empty());
}

TEST_CASE("blocks partition the edges and form a forest") {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(rng, 3 + i % 12, 0.25);
    const auto dec = blocks(g);
    int total = 0;
    for (const auto& b : dec.blocks) total += block_edge_count(g, b);
    CHECK(total == static_cast<int>(g.edges().size()));
    // Forest: incidences = nodes - trees.
    const int nodes = static_cast<int>(dec.blocks.size()) + dec.cut_vertices.size();
    int trees = 0;
    for (const auto& comp : components(g))
      if (comp.size() > 0) ++trees;
    CHECK(static_cast<int>(dec.tree_edges.size()) == nodes - trees);
    for (int c : dec.cut_vertices) CHECK(components(g, g.vertices() - VertexSet{c}).size() > components(g).size());
  }
}

TEST_CASE("induced containment") {
  CHECK_FALSE(induced_contains(complete_graph(4), path_graph(3)));
  CHECK_FALSE(induced_contains(split_petersen().graph, complete_graph(3)));
  CHECK_FALSE(induced_contains(complete_bipartite(2, 4), linear_forest({2, 1, 1})));
  CHECK(induced_contains(petersen(), claw()));
  CHECK(induced_contains(split_petersen().graph, linear_forest({1, 1, 1, 1, 1})));
}

TEST_CASE("induced containment agrees with injection search") {
  std::mt19937 rng(3);
  std::vector<Graph> patterns;
  for (const char* g6 : {"Bg", "Bw", "B?", "C~", "Cg", "C_", "C`", "Cw", "CF", "Cr", "Cs", "C]", "C^", "C?"})
    patterns.push_back(parse_graph6(g6));
  for (int i = 0; i < 150; ++i) {
    const Graph g = oracle::random_graph(rng, 4 + i % 5, 0.5);
    for (const auto& h : patterns) CHECK(induced_contains(g, h) == oracle::induced_contains(g, h));
  }
}

TEST_CASE("linear forests") {
  CHECK(is_linear_forest(linear_forest({3, 3, 3})));
  CHECK_FALSE(is_linear_forest(claw()));
  CHECK_FALSE(is_linear_forest(cycle_graph(4)));
  CHECK(linear_forest_type(linear_forest({1, 7, 1})) == std::vector<int>{7, 1, 1});
}

TEST_CASE("edge subdivision") {
  Graph k2(2);
  k2.add_edge(0, 1);
  const Graph p3 = subdivide_edges(k2, {{{0, 1}, 2}});
  CHECK(p3.order() == 3);
  CHECK(p3.edges().size() == 2);
  CHECK(is_linear_forest(p3));

  const Graph c6 = subdivide_edges(complete_graph(3), {{{0, 1}, 2}, {{0, 2}, 2}, {{1, 2}, 2}});
  CHECK(c6.order() == 6);
  CHECK(is_regular(c6));
  CHECK(girth(c6) == 6);
  CHECK_THROWS_AS(subdivide_edges(k2, {{{0, 2}, 2}}), PreconditionError);
}

TEST_CASE("cubic vertices become triangles") {
  const Graph net = replace_cubic_with_triangles(claw(), VertexSet{0});
  CHECK(net.order() == 6);
  CHECK(net.edges().size() == 6);
  CHECK(girth(net) == 3);
  CHECK(net.max_degree() == 3);
  CHECK(same(replace_cubic_with_triangles(petersen(), {}), petersen()));
  CHECK_THROWS_AS(replace_cubic_with_triangles(path_graph(3), VertexSet{1}), PreconditionError);
}

TEST_CASE("flow network") {
  FlowNetwork f(4);
  f.add_arc(0, 1, 2);
  f.add_arc(0, 2, 1);
  f.add_arc(1, 3, 1);
  f.add_arc(2, 3, 2);
  f.add_arc(1, 2, 1);
  CHECK(f.max_flow(0, 3) == 3);
}
