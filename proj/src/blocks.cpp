#include "gallai/blocks.hpp"

#include <algorithm>

namespace gallai {

namespace {

struct Frame {
  int v;
  int cursor;  // last neighbour examined
};

}  // namespace

BlockDecomposition blocks(const Graph& g, const VertexSet& within) {
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  std::vector<Frame> frames;
  BlockDecomposition out;
  int clock = 0;

  for (int root : within & g.vertices()) {
    if (disc[root] != -1) continue;
    if ((g.neighbors(root) & within).empty()) {
      out.blocks.push_back(VertexSet::singleton(root));
      disc[root] = clock++;
      continue;
    }
    disc[root] = low[root] = clock++;
    stack.push_back(root);
    frames.push_back({root, -1});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const VertexSet nbrs = g.neighbors(f.v) & within;
      int w = nbrs.next(f.cursor);
      if (w != -1) {
        f.cursor = w;
        if (disc[w] == -1) {
          parent[w] = f.v;
          disc[w] = low[w] = clock++;
          stack.push_back(w);
          frames.push_back({w, -1});
        } else if (w != parent[f.v]) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      int child = f.v;
      frames.pop_back();
      if (frames.empty()) break;
      int v = frames.back().v;
      low[v] = std::min(low[v], low[child]);
      if (low[child] >= disc[v]) {
        VertexSet block = VertexSet::singleton(v);
        while (true) {
          int x = stack.back();
          stack.pop_back();
          block.insert(x);
          if (x == child) break;
        }
        out.blocks.push_back(block);
      }
    }
    stack.clear();
  }

  std::sort(out.blocks.begin(), out.blocks.end(), lex_less);
  std::vector<int> membership(static_cast<std::size_t>(n), 0);
  for (const auto& b : out.blocks)
    for (int v : b) ++membership[v];
  for (int v = 0; v < n; ++v)
    if (membership[v] >= 2) out.cut_vertices.insert(v);
  for (int i = 0; i < static_cast<int>(out.blocks.size()); ++i)
    for (int v : out.blocks[i] & out.cut_vertices) out.tree_edges.emplace_back(i, v);
  return out;
}

BlockDecomposition blocks(const Graph& g) { return blocks(g, g.vertices()); }

int block_edge_count(const Graph& g, const VertexSet& block) {
  int twice = 0;
  for (int v : block) twice += (g.neighbors(v) & block).size();
  return twice / 2;
}

}  // namespace gallai
