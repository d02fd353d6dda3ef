#pragma once

#include <utility>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

/// Block / cut-vertex decomposition. Isolated vertices form singleton blocks;
/// a bridge forms a two-vertex block.
struct BlockDecomposition {
  std::vector<VertexSet> blocks;  ///< ordered by (min vertex, then lex)
  VertexSet cut_vertices;
  /// (block index, cut vertex) incidences of the block-cutpoint forest.
  std::vector<std::pair<int, int>> tree_edges;
};

BlockDecomposition blocks(const Graph& g);
BlockDecomposition blocks(const Graph& g, const VertexSet& within);

/// Edges of g with both ends in `block`.
int block_edge_count(const Graph& g, const VertexSet& block);

}  // namespace gallai
