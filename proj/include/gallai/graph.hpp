#pragma once

#include <span>
#include <utility>
#include <vector>

#include "gallai/vertex_set.hpp"

namespace gallai {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const { return edge_count_; }

  /// Throws PreconditionError on loops or out-of-range labels; adding an
  /// existing edge is a no-op.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  bool adjacent(int u, int v) const { return rows_[u].contains(v); }
  const VertexSet& neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return rows_[v].size(); }
  int max_degree() const;
  int min_degree() const;
  VertexSet vertices() const { return VertexSet::range(order()); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Induced subgraph on `keep`, relabelled in increasing order. When
  /// `labels` is given it receives the original label of each new vertex.
  Graph induced(const VertexSet& keep, std::vector<int>* labels = nullptr) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> rows_;
  int edge_count_ = 0;
};

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
Graph complement(const Graph& g);

}  // namespace gallai
