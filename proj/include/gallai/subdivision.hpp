#pragma once

#include <optional>
#include <vector>

#include "gallai/graph.hpp"
#include "gallai/paths.hpp"

namespace gallai {

/// Small multigraph whose subdivisions are sought. Edges are unordered
/// pairs; repeats are parallel edges and (u, u) is a loop.
struct MultigraphPattern {
  int order = 0;
  std::vector<Edge> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  /// Degree of v, loops counting twice.
  int degree(int v) const;
  bool is_connected() const;

  /// Single edge: subdivisions are paths with at least two vertices.
  static MultigraphPattern path_pattern();
  /// Two parallel edges: subdivisions are cycles.
  static MultigraphPattern cycle_pattern();
  static MultigraphPattern complete(int k);
};

/// All multigraphs with exactly m edges and no isolated vertices, up to
/// isomorphism (m is 1 or 2).
std::vector<MultigraphPattern> patterns_with_edges(int m);

/// A subdivision of a pattern inside a host graph. edge_paths[i] runs from
/// branch[a] to branch[b] for pattern edge (a, b); for a loop it lists the
/// cycle starting at the branch vertex, without repeating it.
struct SubdivisionEmbedding {
  std::vector<int> branch;
  std::vector<PathSeq> edge_paths;

  VertexSet vertex_set() const;
  int size() const { return vertex_set().size(); }
};

/// Checks that `e` is a subdivision of `r` in `g`.
bool is_subdivision(const Graph& g, const MultigraphPattern& r, const SubdivisionEmbedding& e);

/// A subdivision of r in g with the most vertices; nullopt if none exists.
std::optional<SubdivisionEmbedding> max_R_subdivision(const Graph& g, const MultigraphPattern& r);

/// Distinct vertex sets of all maximum R-subdivisions, sorted
/// lexicographically. Throws CapExceeded past result_cap sets.
std::vector<VertexSet> enumerate_max_R_subdivisions(const Graph& g, const MultigraphPattern& r,
                                                    std::size_t result_cap = kDefaultResultCap);

}  // namespace gallai
