#include <doctest.h>

#include <random>

#include "gallai/constructions.hpp"
#include "gallai/errors.hpp"
#include "gallai/paths.hpp"
#include "oracles.hpp"

using namespace gallai;

namespace {

std::set<oracle::Mask> masks(const std::vector<VertexSet>& sets) {
  std::set<oracle::Mask> out;
  for (const auto& s : sets) out.insert(oracle::to_mask(s));
  return out;
}

constexpr SearchMethod kMethods[] = {SearchMethod::SubsetDP, SearchMethod::DepthFirst};

}  // namespace

TEST_CASE("path and cycle predicates") {
  const Graph c5 = cycle_graph(5);
  const std::vector<int> walk = {0, 1, 2, 3, 4};
  CHECK(is_path(c5, walk));
  CHECK(is_cycle(c5, walk));
  CHECK_FALSE(is_path(c5, std::vector<int>{0, 2}));
  CHECK_FALSE(is_path(c5, std::vector<int>{0, 1, 0}));
  CHECK_FALSE(is_cycle(c5, std::vector<int>{0, 1, 2}));
  CHECK(CycleSeq::canonical({3, 2, 1, 0, 4}).vertices == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(CycleSeq::canonical({2, 0, 4, 3, 1}).vertices == std::vector<int>{0, 2, 1, 3, 4});
}

TEST_CASE("named fixtures") {
  for (SearchMethod m : kMethods) {
    CHECK(longest_path_length(petersen(), m) == 10);
    CHECK(longest_cycle_length(petersen(), m) == 9);
    CHECK(longest_path_length(split_petersen().graph, m) == 10);
    CHECK(longest_path_length(path_graph(7), m) == 7);
    CHECK_FALSE(longest_cycle_length(path_graph(7), m).has_value());
    CHECK(longest_cycle_length(complete_graph(6), m) == 6);
  }
  CHECK(longest_path_length(Graph(0)) == 0);
  CHECK(longest_path(Graph(0), {}).vertices.empty());
  CHECK(longest_path_length(Graph(3)) == 1);
}

TEST_CASE("subset DP caps its instance size") {
  CHECK_THROWS_AS(longest_path_length(path_graph(30), SearchMethod::SubsetDP), CapExceeded);
  CHECK(longest_path_length(path_graph(30), SearchMethod::Auto) == 30);
}

TEST_CASE("witnesses are valid maximum paths and cycles") {
  std::mt19937 rng(1);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(rng, 2 + i % 10, 0.35);
    const auto truth_p = oracle::longest_paths(g);
    const auto truth_c = oracle::longest_cycles(g);
    for (SearchMethod m : kMethods) {
      const PathSeq p = longest_path(g, g.vertices(), m);
      CHECK(is_path(g, p.vertices));
      CHECK(p.order() == truth_p.order);
      const auto c = longest_cycle(g, g.vertices(), kNoCap, m);
      CHECK(c.has_value() == (truth_c.order > 0));
      if (c) {
        CHECK(is_cycle(g, c->vertices));
        CHECK(c->order() == truth_c.order);
      }
    }
  }
}

TEST_CASE("enumeration matches exhaustive walks") {
  std::mt19937 rng(2);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(rng, 3 + i % 8, 0.45);
    const auto truth_p = oracle::longest_paths(g);
    const auto truth_c = oracle::longest_cycles(g);
    for (SearchMethod m : kMethods) {
      CHECK(masks(enumerate_longest_paths(g, {m})) == truth_p.sets);
      CHECK(masks(enumerate_longest_cycles(g, {m})) == truth_c.sets);
    }
  }
}

TEST_CASE("restricted and capped searches") {
  std::mt19937 rng(3);
  for (int i = 0; i < 150; ++i) {
    const Graph g = oracle::random_graph(rng, 9, 0.4);
    const VertexSet within = VertexSet::range(9) - VertexSet{i % 9, (i + 4) % 9};
    const oracle::Mask wm = oracle::to_mask(within);
    const int cap = 3 + i % 5;
    for (SearchMethod m : kMethods) {
      CHECK(longest_path_length(g, within, m) == oracle::longest_paths(g, wm).order);
      const auto truth = oracle::longest_cycles(g, wm, cap);
      const auto c = longest_cycle(g, within, cap, m);
      CHECK(c.has_value() == (truth.order > 0));
      if (c) {
        CHECK(c->order() == truth.order);
        CHECK(c->vertex_set().is_subset_of(within));
      }
      CHECK(masks(enumerate_longest_paths(g, within, {m})) == oracle::longest_paths(g, wm).sets);
    }
  }
}

TEST_CASE("enumeration respects the result cap") {
  CHECK_THROWS_AS(enumerate_longest_paths(complete_bipartite(1, 8), {SearchMethod::Auto, 3}), CapExceeded);
  CHECK(enumerate_longest_paths(complete_graph(8), {SearchMethod::Auto, 1}).size() == 1);
}

TEST_CASE("depth-first search handles sparse graphs beyond the DP limit") {
  const Graph g1 = subdivided_split_petersen(2, 31);
  CHECK(g1.order() == 114);
  const PathSeq p = longest_path(g1, g1.vertices());
  CHECK(is_path(g1, p.vertices));
  // Two pendant paths of 30 fresh vertices each plus the core between them.
  CHECK(p.order() == longest_path_length(g1, SearchMethod::DepthFirst));
  CHECK(p.order() > 60);
}

TEST_CASE("fibers") {
  const Graph p5 = path_graph(5);
  CHECK(x_fiber(p5, 2).vertices == std::vector<int>{2, 1, 0});
  CHECK(x_fiber(p5, 0).order() == 5);
  CHECK(xy_fiber(p5, 1, 3)->vertices == std::vector<int>{1, 2, 3});
  CHECK_FALSE(xy_fiber(disjoint_triangles(2), 0, 3).has_value());

  std::mt19937 rng(4);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(rng, 8, 0.4);
    const int x = i % 8;
    const int y = (i + 3) % 8;
    const auto a = oracle::matrix(g);
    // Exhaustive fibers: longest paths starting at x (and ending at y).
    int best_x = 0;
    int best_xy = 0;
    std::function<void(int, oracle::Mask, int)> walk = [&](int v, oracle::Mask used, int len) {
      best_x = std::max(best_x, len);
      if (v == y) best_xy = std::max(best_xy, len);
      for (int u = 0; u < 8; ++u)
        if (a[v][u] && !(used >> u & 1)) walk(u, used | oracle::Mask{1} << u, len + 1);
    };
    walk(x, oracle::Mask{1} << x, 1);
    const PathSeq fx = x_fiber(g, x);
    CHECK(fx.vertices.front() == x);
    CHECK(is_path(g, fx.vertices));
    CHECK(fx.order() == best_x);
    const auto fxy = xy_fiber(g, x, y);
    CHECK(fxy.has_value() == (best_xy > 0));
    if (fxy) {
      CHECK(fxy->order() == best_xy);
      CHECK(fxy->vertices.front() == x);
      CHECK(fxy->vertices.back() == y);
    }
  }
}

TEST_CASE("block bounds dominate true path orders") {
  std::mt19937 rng(6);
  for (int i = 0; i < 150; ++i) {
    const Graph g = oracle::random_graph(rng, 9, 0.3);
    const int start = i % 9;
    const VertexSet avail = VertexSet::range(9) - VertexSet{start, (i + 5) % 9};
    const oracle::Mask allowed = oracle::to_mask(avail) | oracle::Mask{1} << start;
    const auto a = oracle::matrix(g);
    std::vector<int> best(9, 0);
    std::function<void(int, oracle::Mask, int)> walk = [&](int v, oracle::Mask used, int len) {
      best[v] = std::max(best[v], len);
      for (int u = 0; u < 9; ++u)
        if (a[v][u] && !(used >> u & 1) && (allowed >> u & 1)) walk(u, used | oracle::Mask{1} << u, len + 1);
    };
    walk(start, oracle::Mask{1} << start, 1);
    const int longest = *std::max_element(best.begin(), best.end());
    CHECK(path_extent_bound(g, start, avail) >= longest);
    for (int t : avail) {
      const int chain = path_chain_bound(g, start, t, avail);
      if (best[t] == 0)
        CHECK(chain == 0);
      else
        CHECK(chain >= best[t]);
    }
  }
}
