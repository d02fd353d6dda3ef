#pragma once

#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

/// Petersen graph on the 2-subsets of {0..4} in lexicographic order,
/// adjacent when disjoint.
Graph petersen();

struct SplitPetersen {
  Graph graph;
  VertexSet r;                 ///< the three degree-1 vertices
  std::vector<Edge> pendant;   ///< the three edges incident to r
};

/// Petersen graph with vertex {0,1} split into three degree-1 vertices.
/// Vertices 0..8 are the remaining 2-subsets in order; 9, 10, 11 hang off
/// 6, 7, 8 respectively.
SplitPetersen split_petersen();

/// Split Petersen graph with each pendant edge replaced by a path of length q
/// and every other edge by a path of length p. Requires p >= 2, q > 15p.
Graph subdivided_split_petersen(int p, int q);

/// The graph above with every cubic vertex replaced by a triangle.
Graph claw_free_split_petersen(int p, int q);

/// K_{a,b}: part {0..a-1} then part {a..a+b-1}.
Graph complete_bipartite(int a, int b);

/// K_{t,t+2} without the matching {i, t+i : i < t}.
Graph ktt2_minus_matching(int t);

struct CliqueStar {
  Graph graph;
  VertexSet s;                    ///< the central k-clique 0..k-1
  std::vector<VertexSet> cliques; ///< X_1..X_{k+2}, each a t-clique
  std::vector<VertexSet> joined;  ///< Y_i: the first k vertices of X_i
};

/// Star K_{1,k+2} with the centre blown up to a k-clique S and every leaf to
/// a t-clique X_i whose first k vertices are completely joined to S.
CliqueStar clique_star(int k, int t);

/// t disjoint triangles {3i, 3i+1, 3i+2}.
Graph disjoint_triangles(int t);

/// Centre 0 adjacent to one corner (3i+1) of each of t triangles
/// {3i+1, 3i+2, 3i+3}.
Graph triangle_star(int t);

/// Disjoint paths of the given orders on consecutive labels.
Graph linear_forest(const std::vector<int>& sizes);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

}  // namespace gallai
