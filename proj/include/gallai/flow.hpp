#pragma once

#include <climits>
#include <vector>

namespace gallai {

/// Integer-capacity flow network with BFS augmenting paths. Flow values in
/// this project are bounded by the vertex count, so Edmonds-Karp is ample.
class FlowNetwork {
 public:
  static constexpr int kInfinite = INT_MAX / 4;

  explicit FlowNetwork(int nodes) : out_(static_cast<std::size_t>(nodes)) {}

  int node_count() const { return static_cast<int>(out_.size()); }

  /// Adds arc from->to with the given capacity; returns its index.
  int add_arc(int from, int to, int capacity);

  /// Augments until no source-sink path remains or `limit` is reached.
  int max_flow(int source, int sink, int limit = kInfinite);

  /// Nodes reachable from `source` in the residual network.
  std::vector<bool> residual_reachable(int source) const;

  int flow_on(int arc) const { return arcs_[arc].flow; }
  int head(int arc) const { return arcs_[arc].to; }
  const std::vector<int>& arcs_from(int node) const { return out_[node]; }
  bool is_forward(int arc) const { return (arc & 1) == 0; }

 private:
  struct Arc {
    int to;
    int capacity;
    int flow;
  };
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
};

}  // namespace gallai
