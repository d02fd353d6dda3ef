#include <doctest.h>

#include <random>

#include "gallai/blocks.hpp"
#include "gallai/constructions.hpp"
#include "gallai/errors.hpp"
#include "gallai/invariants.hpp"
#include "gallai/transversal.hpp"
#include "oracles.hpp"

using namespace gallai;

namespace {

oracle::Mask all_of(const std::set<oracle::Mask>& sets) {
  oracle::Mask m = ~oracle::Mask{0};
  for (auto s : sets) m &= s;
  return m;
}

Graph spider(int arm) {
  Graph g(3 * arm + 1);
  for (int a = 0; a < 3; ++a) {
    for (int i = 1; i < arm; ++i) g.add_edge(a * arm + i - 1, a * arm + i);
    g.add_edge(a * arm + arm - 1, 3 * arm);
  }
  return g;
}

// Spine of two arms around a triangle, with a pendant cycle hanging from the
// triangle's middle vertex. attach_low gives the cycle's attachment vertex
// label 0.
Graph spine_with_cycle(int arm, int cycle, bool attach_low) {
  const int n = 2 * arm + 3 + cycle;
  Graph g(n);
  int next = attach_low ? 1 : 0;
  std::vector<int> spine;
  for (int i = 0; i < 2 * arm + 3; ++i) spine.push_back(next++);
  std::vector<int> ring{attach_low ? 0 : next++};
  for (int i = 1; i < cycle; ++i) ring.push_back(next++);
  const int x = spine[arm];
  const int y = spine[arm + 1];
  const int z = spine[arm + 2];
  // Spine order: left arm, x, z, y, right arm.
  std::vector<int> order(spine.begin(), spine.begin() + arm);
  order.insert(order.end(), {x, z, y});
  order.insert(order.end(), spine.begin() + arm + 3, spine.end());
  for (std::size_t i = 1; i < order.size(); ++i) g.add_edge(order[i - 1], order[i]);
  g.add_edge(x, y);
  g.add_edge(z, ring[0]);
  for (int i = 0; i < cycle; ++i) g.add_edge(ring[i], ring[(i + 1) % cycle]);
  return g;
}

std::string steps(const SublinearResult& r) {
  std::string s;
  for (const auto& e : r.trace) s += std::string(1, e.step) + ":" + e.action + " ";
  return s;
}

}  // namespace

TEST_CASE("minimum hitting sets") {
  const std::vector<VertexSet> edges = {VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{2, 3}};
  const auto h = minimum_hitting_set(edges);
  CHECK(h.size == 2);
  CHECK(h.witness.to_vector() == std::vector<int>{0, 2});
  CHECK(minimum_hitting_set({}).size == 0);

  std::mt19937 rng(21);
  for (int i = 0; i < 300; ++i) {
    const int n = 4 + i % 8;
    std::set<oracle::Mask> sets;
    std::vector<VertexSet> hyper;
    std::uniform_int_distribution<oracle::Mask> pick(1, (oracle::Mask{1} << n) - 1);
    for (int e = 0; e < 1 + i % 9; ++e) {
      const oracle::Mask m = pick(rng);
      sets.insert(m);
      VertexSet s;
      for (int v = 0; v < n; ++v)
        if (m >> v & 1) s.insert(v);
      hyper.push_back(s);
    }
    const auto truth = oracle::min_hitting_set(sets, n);
    const auto got = minimum_hitting_set(hyper);
    CHECK(got.size == truth.first);
    CHECK(oracle::to_mask(got.witness) == truth.second);
  }
}

TEST_CASE("fixture transversal numbers") {
  const Graph g0 = split_petersen().graph;
  CHECK(gallai_vertices(g0).empty());
  CHECK(lpt_exact(g0).size == 2);
  CHECK(lct_exact(petersen()).size == 2);
  CHECK(lpt_exact(petersen()).size == 1);
  CHECK(lpt_exact(path_graph(20)).size == 1);
  CHECK(lct_exact(disjoint_triangles(4)).size == 4);
  CHECK(lct_exact(triangle_star(3)).size == 3);
  CHECK(lpt_exact(triangle_star(3)).size == 1);
  CHECK(gallai_vertices(triangle_star(3)).to_vector() == std::vector<int>{0});
  CHECK_THROWS_AS(gallai_vertices(disjoint_triangles(2)), PreconditionError);
  CHECK_THROWS_AS(lct_exact(path_graph(4)), PreconditionError);
}

TEST_CASE("gallai sets and transversal numbers match exhaustive search") {
  std::mt19937 rng(22);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_connected(rng, 3 + i % 8, i % 10);
    const auto paths = oracle::longest_paths(g);
    CHECK(oracle::to_mask(gallai_vertices(g)) == (all_of(paths.sets) & ((oracle::Mask{1} << g.order()) - 1)));
    const auto lpt = lpt_exact(g);
    const auto truth = oracle::min_hitting_set(paths.sets, g.order());
    CHECK(lpt.size == truth.first);
    CHECK(oracle::to_mask(lpt.witness) == truth.second);
    const auto cycles = oracle::longest_cycles(g);
    if (cycles.order == 0) continue;
    const auto lct = lct_exact(g);
    CHECK(lct.size == oracle::min_hitting_set(cycles.sets, g.order()).first);
    for (auto c : cycles.sets) CHECK((oracle::to_mask(lct.witness) & c) != 0);
  }
}

TEST_CASE("menger duality") {
  std::mt19937 rng(23);
  for (int i = 0; i < 300; ++i) {
    const int n = 4 + i % 7;
    const Graph g = oracle::random_graph(rng, n, 0.35);
    std::uniform_int_distribution<int> pick(0, n - 1);
    VertexSet x{pick(rng)};
    VertexSet y{pick(rng), pick(rng)};
    if (i % 3 == 0) x.insert(pick(rng));
    const auto sc = menger(g, x, y);
    CHECK(sc.size == oracle::min_separator(g, oracle::to_mask(x), oracle::to_mask(y)));
    CHECK(sc.separator.size() == sc.size);
    CHECK(static_cast<int>(sc.connector.size()) == sc.size);
    VertexSet used;
    for (const auto& p : sc.connector) {
      CHECK(is_path(g, p.vertices));
      CHECK(x.contains(p.vertices.front()));
      CHECK(y.contains(p.vertices.back()));
      for (std::size_t j = 1; j + 1 < p.vertices.size(); ++j) CHECK_FALSE((x | y).contains(p.vertices[j]));
      CHECK_FALSE(used.intersects(p.vertex_set()));
      used |= p.vertex_set();
    }
    // The separator really separates.
    const VertexSet rest = g.vertices() - sc.separator;
    for (int s : x & rest) CHECK_FALSE(reachable(g, s, rest).intersects(y));
  }
}

TEST_CASE("menger restricted to a subgraph") {
  const Graph c6 = cycle_graph(6);
  // Endpoints count toward the disjointness, so a single source admits one path.
  CHECK(menger(c6, VertexSet{0}, VertexSet{3}).size == 1);
  CHECK(menger(c6, VertexSet{0, 1}, VertexSet{3, 4}).size == 2);
  CHECK(menger(c6, VertexSet{0}, VertexSet{3}, VertexSet{0, 1, 2, 3}).size == 1);
  CHECK(menger(c6, VertexSet{0, 1}, VertexSet{1, 4}).size == 2);
}

TEST_CASE("special blocks") {
  // Longest paths of a path graph all use its middle edges.
  const auto p5 = find_special_block(path_graph(5));
  REQUIRE(p5.has_value());
  CHECK(p5->size() == 2);
  CHECK_FALSE(find_special_block(spider(3)).has_value());
  std::mt19937 rng(24);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_connected(rng, 3 + i % 8, i % 4);
    const auto paths = oracle::longest_paths(g);
    std::optional<VertexSet> expected;
    for (const auto& b : blocks(g).blocks) {
      bool all = true;
      for (auto s : paths.sets) all = all && oracle::popcount(s & oracle::to_mask(b)) >= std::min(2, b.size());
      if (all && (!expected || lex_less(b, *expected))) expected = b;
    }
    CHECK(find_special_block(g) == expected);
  }
}

TEST_CASE("pairwise intersection of maximum subdivisions") {
  CHECK(pairwise_intersecting(petersen(), MultigraphPattern::path_pattern()));
  CHECK(pairwise_intersecting(petersen(), MultigraphPattern::cycle_pattern()));
  CHECK_FALSE(pairwise_intersecting(disjoint_triangles(2), MultigraphPattern::cycle_pattern()));
  CHECK_FALSE(pairwise_intersecting(disjoint_union(path_graph(3), path_graph(3)), MultigraphPattern::path_pattern()));
  std::mt19937 rng(25);
  for (int i = 0; i < 150; ++i) {
    const Graph g = oracle::random_graph(rng, 4 + i % 5, 0.3);
    const auto paths = oracle::longest_paths(g);
    if (paths.order < 2) continue;
    bool meet = true;
    for (auto a : paths.sets)
      for (auto b : paths.sets) meet = meet && (a & b);
    CHECK(pairwise_intersecting(g, MultigraphPattern::path_pattern()) == meet);
  }
}

TEST_CASE("sublinear bound is exact") {
  CHECK(sublinear_bound(16, 1) == 64);
  CHECK(sublinear_bound(81, 1) == 216);
  CHECK(sublinear_bound(1, 1) == 8);
  CHECK(sublinear_bound(16, 16) == 2048);
  CHECK(sublinear_bound(2, 1) == 14);   // 8 * 2^0.75 = 13.45...
  CHECK(sublinear_bound(16, 2) == 153);  // 8 * 2^1.25 * 8 = 152.2...
}

TEST_CASE("sublinear transversal validates on fixtures") {
  for (const Graph& g : {split_petersen().graph, petersen(), path_graph(20), triangle_star(4),
                         subdivided_split_petersen(2, 31)}) {
    const auto r = sublinear_transversal(g, Objective::LongestPath);
    CHECK(validate_transversal(g, Objective::LongestPath, r.transversal));
    CHECK_FALSE(r.diagnostic.has_value());
    CHECK(r.transversal.size() <= std::min<long long>(g.order(), r.bound));
  }
  const auto c = sublinear_transversal(petersen(), Objective::LongestCycle);
  CHECK(validate_transversal(petersen(), Objective::LongestCycle, c.transversal));
  CHECK(c.trace.back().step == 'b');
}

TEST_CASE("validation agrees with hitting every enumerated optimum") {
  std::mt19937 rng(26);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_connected(rng, 4 + i % 7, i % 8);
    const auto paths = oracle::longest_paths(g);
    std::uniform_int_distribution<oracle::Mask> pick(0, (oracle::Mask{1} << g.order()) - 1);
    const oracle::Mask t = pick(rng) & pick(rng);
    VertexSet ts;
    for (int v = 0; v < g.order(); ++v)
      if (t >> v & 1) ts.insert(v);
    bool hits = true;
    for (auto s : paths.sets) hits = hits && (s & t);
    CHECK(validate_transversal(g, Objective::LongestPath, ts) == hits);
  }
}

TEST_CASE("sublinear transversal on random connected graphs") {
  std::mt19937 rng(27);
  for (int i = 0; i < 60; ++i) {
    const Graph g = oracle::random_connected(rng, 6 + i % 20, i % 15);
    for (std::optional<double> eps : {std::optional<double>{}, std::optional<double>{0.5}, std::optional<double>{0.3}}) {
      const auto r = sublinear_transversal(g, Objective::LongestPath, {eps, false});
      CHECK(validate_transversal(g, Objective::LongestPath, r.transversal));
      CHECK_FALSE(r.trace.empty());
    }
  }
}

TEST_CASE("epsilon overrides reach every iteration step") {
  // Three equal arms: the first split is cut inside an arm, leaving the other
  // two arms, whose separator then meets every remaining optimum.
  const auto a = sublinear_transversal(spider(5), Objective::LongestPath, {0.3, true});
  CHECK(steps(a) == "b:split c:shrink b:split c:separator-hits-all ");
  CHECK(validate_transversal(spider(5), Objective::LongestPath, a.transversal));

  // The pendant 6-cycle is the longest cycle and misses the spine, which is
  // the only longest path.
  const Graph low = spine_with_cycle(7, 6, true);
  const auto b = sublinear_transversal(low, Objective::LongestPath, {0.2, true});
  CHECK(steps(b) ==
        "b:split c:large-connector d:disjoint-optimum e:shrink b:split c:large-connector d:cycle-hits-all ");
  CHECK(validate_transversal(low, Objective::LongestPath, b.transversal));

  const Graph high = spine_with_cycle(7, 6, false);
  const auto c = sublinear_transversal(high, Objective::LongestPath, {0.2, true});
  CHECK(steps(c) == "b:split c:large-connector d:disjoint-optimum e:separator-hits-all ");
  CHECK(validate_transversal(high, Objective::LongestPath, c.transversal));
}

TEST_CASE("strict mode reports the fallback branch") {
  // Out of the regime the argument needs (eps^2 n < 2): a tree has no cycle.
  CHECK_THROWS_AS(sublinear_transversal(spider(5), Objective::LongestPath, {0.2, true}), UnreachableBranch);
  const auto r = sublinear_transversal(spider(5), Objective::LongestPath, {0.2, false});
  CHECK(r.diagnostic.has_value());
  CHECK(validate_transversal(spider(5), Objective::LongestPath, r.transversal));
}

TEST_CASE("sublinear transversal preconditions") {
  CHECK_THROWS_AS(sublinear_transversal(disjoint_triangles(2), Objective::LongestCycle), PreconditionError);
  // Disconnected but with a single optimum: accepted.
  const Graph g = disjoint_union(path_graph(5), path_graph(2));
  CHECK(validate_transversal(g, Objective::LongestPath, sublinear_transversal(g, Objective::LongestPath).transversal));
  CHECK(sublinear_transversal(Graph(0), Objective::LongestPath).transversal.empty());
}
