#include <doctest.h>

#include "gallai/blocks.hpp"
#include "gallai/constructions.hpp"
#include "gallai/errors.hpp"
#include "gallai/graph6.hpp"
#include "gallai/induced.hpp"
#include "gallai/invariants.hpp"
#include "gallai/transversal.hpp"
#include "oracles.hpp"

using namespace gallai;

TEST_CASE("petersen graph") {
  const Graph p = petersen();
  CHECK(p.order() == 10);
  CHECK(p.edges().size() == 15);
  CHECK(is_regular(p));
  CHECK(girth(p) == 5);
  CHECK(kappa(p) == 3);
  CHECK(alpha(p) == 4);
  CHECK(oracle::kappa(p) == 3);
  CHECK(oracle::alpha(p) == 4);
  CHECK(oracle::longest_cycles(p).order == 9);
  CHECK(oracle::longest_paths(p).order == 10);
  // {0,1} is vertex 0 and is adjacent to {2,3}, {2,4}, {3,4}.
  CHECK(p.neighbors(0).to_vector() == std::vector<int>{7, 8, 9});
}

TEST_CASE("split petersen graph") {
  const SplitPetersen s = split_petersen();
  const Graph& g = s.graph;
  CHECK(g.order() == 12);
  CHECK(g.edges().size() == 15);
  CHECK(s.r.to_vector() == std::vector<int>{9, 10, 11});
  for (int v : s.r) CHECK(g.degree(v) == 1);
  CHECK(s.pendant == std::vector<Edge>{{6, 9}, {7, 10}, {8, 11}});
  CHECK_FALSE(induced_contains(g, complete_graph(3)));
  CHECK(is_connected(g));
  CHECK(alpha(g) == 6);
  CHECK(gallai_vertices(g).empty());
  CHECK(lpt_exact(g).size == 2);
  const auto paths = oracle::longest_paths(g);
  CHECK(oracle::min_hitting_set(paths.sets, 12).first == 2);
}

TEST_CASE("subdivided split petersen graphs") {
  const Graph g1 = subdivided_split_petersen(2, 31);
  CHECK(g1.order() == 12 + 12 * (2 - 1) + 3 * (31 - 1));
  CHECK(*girth(g1) > 9);
  CHECK(gallai_vertices(g1).empty());
  CHECK(subdivided_split_petersen(3, 46).order() == 12 + 12 * 2 + 3 * 45);
  CHECK_THROWS_AS(subdivided_split_petersen(1, 31), PreconditionError);
  CHECK_THROWS_AS(subdivided_split_petersen(2, 30), PreconditionError);

  const Graph g2 = claw_free_split_petersen(2, 31);
  int cubic = 0;
  for (int v = 0; v < g1.order(); ++v) cubic += g1.degree(v) == 3;
  CHECK(cubic == 9);
  CHECK(g2.order() == g1.order() + 2 * cubic);
  CHECK_FALSE(induced_contains(g2, complete_bipartite(1, 3)));
  CHECK(gallai_vertices(g2).empty());
}

TEST_CASE("complete bipartite sharpness witnesses") {
  const Graph k24 = complete_bipartite(2, 4);
  CHECK(k24.max_degree() == 4);
  const VertexSet gk = gallai_vertices(k24);
  CHECK(gk.to_vector() == std::vector<int>{0, 1});
  CHECK_FALSE(induced_contains(k24, linear_forest({3, 1})));

  const Graph m = ktt2_minus_matching(3);
  CHECK(m.max_degree() == 4);
  CHECK(gallai_vertices(m).to_vector() == std::vector<int>{0, 1, 2});
  int low = 0;
  for (int v = 3; v < 8; ++v)
    if (m.degree(v) == 3) ++low;
  CHECK(low == 2);
  CHECK_FALSE(induced_contains(m, linear_forest({2, 1, 1})));
  CHECK_THROWS_AS(complete_bipartite(0, 2), PreconditionError);
}

TEST_CASE("clique star family") {
  for (auto [k, t] : std::vector<std::pair<int, int>>{{1, 2}, {1, 4}, {2, 3}}) {
    const CliqueStar c = clique_star(k, t);
    const Graph& g = c.graph;
    CHECK(g.order() == k + (k + 2) * t);
    CHECK(kappa(g) == k);
    CHECK(alpha(g) <= k + 3);
    CHECK(longest_path_length(g) == g.order() - t);
    CHECK(gallai_vertices(g) == c.s);
    for (int s : c.s) CHECK(g.degree(s) == k * (k + 2) + (k - 1));
    // Cover by k + 3 cliques: S and the X_i.
    VertexSet cover = c.s;
    for (const auto& x : c.cliques) {
      for (int u : x)
        for (int v : x)
          if (u != v) CHECK(g.adjacent(u, v));
      cover |= x;
    }
    CHECK(cover == g.vertices());
    CHECK(c.cliques.size() == static_cast<std::size_t>(k + 2));
  }
  CHECK_THROWS_AS(clique_star(3, 2), PreconditionError);
}

TEST_CASE("triangle families") {
  for (int t = 1; t <= 5; ++t) {
    CHECK(lct_exact(disjoint_triangles(t)).size == t);
    const Graph s = triangle_star(t);
    CHECK(s.order() == 3 * t + 1);
    CHECK(is_connected(s));
  }
  CHECK(lct_exact(triangle_star(3)).size == 3);
  CHECK(lpt_exact(triangle_star(3)).size == 1);
}

TEST_CASE("linear forests") {
  CHECK(linear_forest_type(linear_forest({3, 3, 3})) == std::vector<int>{3, 3, 3});
  CHECK(linear_forest({7, 1, 1}).edges().size() == 6);
  CHECK(alpha(linear_forest({1, 1, 1, 1, 1})) == 5);
  CHECK_THROWS_AS(linear_forest({2, 0}), PreconditionError);
}

TEST_CASE("generators are deterministic") {
  CHECK(to_graph6(split_petersen().graph) == to_graph6(split_petersen().graph));
  CHECK(to_graph6(claw_free_split_petersen(2, 31)) == to_graph6(claw_free_split_petersen(2, 31)));
  CHECK(to_graph6(clique_star(2, 3).graph) == to_graph6(clique_star(2, 3).graph));
}
