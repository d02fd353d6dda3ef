#pragma once

#include <vector>

#include "gallai/graph.hpp"
#include "gallai/paths.hpp"

namespace gallai {

/// How a component of G - V(P) attaches to the path P.
struct AttachmentAnalysis {
  PathSeq path;
  VertexSet component;
  /// Path positions with a neighbour in the component, increasing.
  std::vector<int> attachment_positions;
  /// rank[i] for each path position i; -1 at attachment points. A position
  /// after attachment point s_j has rank dist(s_j, w) - 1; a position before
  /// the first attachment point has rank equal to its index.
  std::vector<int> rank;

  std::vector<int> attachment_points() const;
};

/// Throws PreconditionError unless h is a component of g - V(p).
AttachmentAnalysis attachment_analysis(const Graph& g, const PathSeq& p, const VertexSet& h);

/// Components of g - V(p), ordered by minimum vertex.
std::vector<VertexSet> off_path_components(const Graph& g, const PathSeq& p);

/// Applies end extensions and rotations, splices and detours (general
/// components first, then the complete-component rules that need a spanning
/// path of the component) until none lengthens the path. Every rule is
/// tried on both orientations and the search restarts after any success.
PathSeq improve_path(const Graph& g, const PathSeq& p);

}  // namespace gallai
