#include "gallai/graph.hpp"

#include <algorithm>
#include <string>

#include "gallai/errors.hpp"

namespace gallai {

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices)
    throw PreconditionError("graph order " + std::to_string(n) + " outside [0, " +
                            std::to_string(kMaxVertices) + "]");
  rows_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order() || v >= order())
    throw PreconditionError("edge endpoint out of range");
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  if (rows_[u].contains(v)) return;
  rows_[u].insert(v);
  rows_[v].insert(u);
  ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order() || v >= order() || !rows_[u].contains(v)) return;
  rows_[u].erase(v);
  rows_[v].erase(u);
  --edge_count_;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& r : rows_) d = std::max(d, r.size());
  return d;
}

int Graph::min_degree() const {
  if (rows_.empty()) return 0;
  int d = kMaxVertices;
  for (const auto& r : rows_) d = std::min(d, r.size());
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < order(); ++u)
    for (int v = rows_[u].next(u); v != -1; v = rows_[u].next(v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const VertexSet& keep, std::vector<int>* labels) const {
  std::vector<int> old_of;
  std::vector<int> new_of(rows_.size(), -1);
  for (int v : keep) {
    if (v >= order()) break;
    new_of[v] = static_cast<int>(old_of.size());
    old_of.push_back(v);
  }
  Graph h(static_cast<int>(old_of.size()));
  for (int i = 0; i < h.order(); ++i)
    for (int w : rows_[old_of[i]] & keep)
      if (new_of[w] > i) h.add_edge(i, new_of[w]);
  if (labels) *labels = std::move(old_of);
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + a.order(), v + a.order());
  return g;
}

Graph complement(const Graph& g) {
  Graph c(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

}  // namespace gallai
