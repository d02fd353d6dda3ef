#include "gallai/constructions.hpp"

#include <map>
#include <string>

#include "gallai/errors.hpp"
#include "gallai/induced.hpp"

namespace gallai {

namespace {

std::vector<std::pair<int, int>> two_subsets() {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) out.emplace_back(a, b);
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace

Graph petersen() {
  const auto subsets = two_subsets();
  Graph g(10);
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v) {
      auto [a, b] = subsets[u];
      auto [c, d] = subsets[v];
      if (a != c && a != d && b != c && b != d) g.add_edge(u, v);
    }
  return g;
}

SplitPetersen split_petersen() {
  const Graph pg = petersen();
  SplitPetersen out{pg.induced(VertexSet::range(10) - VertexSet{0}), {9, 10, 11}, {}};
  Graph g(12);
  for (auto [u, v] : out.graph.edges()) g.add_edge(u, v);
  int fresh = 9;
  for (int w : pg.neighbors(0)) {
    out.pendant.emplace_back(w - 1, fresh);
    g.add_edge(w - 1, fresh++);
  }
  out.graph = g;
  return out;
}

Graph subdivided_split_petersen(int p, int q) {
  require(p >= 2, "p must be at least 2");
  require(q > 15 * p, "q must exceed 15p");
  const SplitPetersen base = split_petersen();
  std::map<Edge, int> lengths;
  for (const auto& e : base.graph.edges()) lengths[e] = p;
  for (const auto& e : base.pendant) lengths[e] = q;
  return subdivide_edges(base.graph, lengths);
}

Graph claw_free_split_petersen(int p, int q) {
  const Graph g = subdivided_split_petersen(p, q);
  VertexSet cubic;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 3) cubic.insert(v);
  return replace_cubic_with_triangles(g, cubic);
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "both parts must be non-empty");
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

Graph ktt2_minus_matching(int t) {
  require(t >= 1, "t must be at least 1");
  Graph g = complete_bipartite(t, t + 2);
  for (int i = 0; i < t; ++i) g.remove_edge(i, t + i);
  return g;
}

CliqueStar clique_star(int k, int t) {
  require(k >= 1 && t >= k, "need 1 <= k <= t");
  CliqueStar out{Graph(k + (k + 2) * t), VertexSet::range(k), {}, {}};
  Graph& g = out.graph;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  for (int i = 0; i < k + 2; ++i) {
    const int base = k + i * t;
    VertexSet x;
    VertexSet y;
    for (int j = 0; j < t; ++j) {
      x.insert(base + j);
      if (j < k) y.insert(base + j);
      for (int l = j + 1; l < t; ++l) g.add_edge(base + j, base + l);
    }
    for (int u : y)
      for (int s = 0; s < k; ++s) g.add_edge(s, u);
    out.cliques.push_back(x);
    out.joined.push_back(y);
  }
  return out;
}

Graph disjoint_triangles(int t) {
  require(t >= 1, "t must be at least 1");
  Graph g(3 * t);
  for (int i = 0; i < t; ++i) {
    g.add_edge(3 * i, 3 * i + 1);
    g.add_edge(3 * i, 3 * i + 2);
    g.add_edge(3 * i + 1, 3 * i + 2);
  }
  return g;
}

Graph triangle_star(int t) {
  require(t >= 1, "t must be at least 1");
  Graph g(3 * t + 1);
  for (int i = 0; i < t; ++i) {
    const int a = 3 * i + 1;
    g.add_edge(a, a + 1);
    g.add_edge(a, a + 2);
    g.add_edge(a + 1, a + 2);
    g.add_edge(0, a);
  }
  return g;
}

Graph linear_forest(const std::vector<int>& sizes) {
  int n = 0;
  for (int s : sizes) {
    require(s >= 1, "component sizes must be positive");
    n += s;
  }
  Graph g(n);
  int base = 0;
  for (int s : sizes) {
    for (int i = 1; i < s; ++i) g.add_edge(base + i - 1, base + i);
    base += s;
  }
  return g;
}

Graph path_graph(int n) { return linear_forest({n}); }

Graph cycle_graph(int n) {
  require(n >= 3, "a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace gallai
