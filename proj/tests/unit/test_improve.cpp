#include <doctest.h>

#include <random>

#include "gallai/constructions.hpp"
#include "gallai/errors.hpp"
#include "gallai/improve.hpp"
#include "oracles.hpp"

using namespace gallai;

namespace {

Graph from_edges(int n, std::initializer_list<Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("attachment analysis") {
  Graph g = path_graph(6);
  Graph h(8);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  h.add_edge(6, 1);
  h.add_edge(6, 4);
  h.add_edge(6, 7);
  const PathSeq p{{0, 1, 2, 3, 4, 5}};
  const auto a = attachment_analysis(h, p, VertexSet{6, 7});
  CHECK(a.attachment_positions == std::vector<int>{1, 4});
  CHECK(a.attachment_points() == std::vector<int>{1, 4});
  CHECK(a.rank == std::vector<int>{0, -1, 0, 1, -1, 0});
  CHECK_THROWS_AS(attachment_analysis(h, p, VertexSet{6}), PreconditionError);
  CHECK_THROWS_AS(attachment_analysis(h, p, VertexSet{5, 6, 7}), PreconditionError);

  const auto comps = off_path_components(h, PathSeq{{0, 1, 2}});
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].to_vector() == std::vector<int>{3, 4, 5, 6, 7});
}

TEST_CASE("end extension") {
  const PathSeq p = improve_path(path_graph(5), PathSeq{{1, 2, 3}});
  CHECK(p.order() == 5);
  CHECK(is_path(path_graph(5), p.vertices));
}

TEST_CASE("end rotation exposes a new extension") {
  // 0-1-2-3 with chord 3-1; vertex 4 hangs off 2.
  const Graph g = from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {1, 3}, {2, 4}});
  const PathSeq p = improve_path(g, PathSeq{{0, 1, 2, 3}});
  CHECK(p.order() == 5);
  CHECK(is_path(g, p.vertices));
}

TEST_CASE("splice through an off-path component") {
  // Path 0-1-2-3; the component {4, 5} joins consecutive vertices 1 and 2.
  const Graph g = from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}, {5, 2}});
  const PathSeq p = improve_path(g, PathSeq{{0, 1, 2, 3}});
  CHECK(p.order() == 6);
  CHECK(is_path(g, p.vertices));
}

TEST_CASE("detour around a skipped vertex") {
  // Path 0-1-2-3-4; component {5, 6, 7} attaches at 1 and 3, and the chord
  // 2-4 lets the path come back through 2 after the detour.
  const Graph g = from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 4}, {1, 5}, {5, 6}, {6, 7}, {7, 3}});
  const PathSeq p = improve_path(g, PathSeq{{0, 1, 2, 3, 4}});
  CHECK(p.order() == 8);
  CHECK(is_path(g, p.vertices));
}

TEST_CASE("clique components") {
  // A triangle {4, 5, 6} hanging from vertices 1 and 2 of the path.
  const Graph g = from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {4, 6}, {1, 4}, {2, 6}});
  const PathSeq p = improve_path(g, PathSeq{{0, 1, 2, 3}});
  CHECK(p.order() == 7);
  CHECK(is_path(g, p.vertices));
}

TEST_CASE("longest paths are fixed points") {
  const Graph pet = petersen();
  const PathSeq best = longest_path(pet, pet.vertices());
  CHECK(improve_path(pet, best).order() == best.order());
}

TEST_CASE("improvement never shortens and always returns a path") {
  std::mt19937 rng(12);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_connected(rng, 6 + i % 10, i % 12);
    // A greedy start: walk from vertex 0 to unvisited neighbours.
    PathSeq p{{0}};
    VertexSet used{0};
    for (bool grew = true; grew;) {
      grew = false;
      for (int u : g.neighbors(p.vertices.back()) - used) {
        p.vertices.push_back(u);
        used.insert(u);
        grew = true;
        break;
      }
    }
    const PathSeq q = improve_path(g, p);
    CHECK(is_path(g, q.vertices));
    CHECK(q.order() >= p.order());
    CHECK(q.order() <= longest_path_length(g));
    // No end of the result can be extended directly.
    for (int end : {q.vertices.front(), q.vertices.back()})
      CHECK((g.neighbors(end) - q.vertex_set()).empty());
  }
}
