#pragma once

#include <map>

#include "gallai/graph.hpp"

namespace gallai {

/// Pattern order accepted by induced_contains.
inline constexpr int kMaxInducedPattern = 12;

/// True iff some injection V(h) -> V(g) preserves edges and non-edges.
bool induced_contains(const Graph& g, const Graph& h);

/// Replaces each listed edge by a path with the given number of edges
/// (1 keeps the edge). Fresh vertices are appended edge by edge in the order
/// of g.edges(), walking from the smaller endpoint.
Graph subdivide_edges(const Graph& g, const std::map<Edge, int>& lengths);

/// Replaces every vertex of `cubic` (each of degree exactly 3) by a triangle
/// whose corners take over its three edges. The old label keeps the edge to
/// the smallest neighbour; two fresh labels are appended per vertex.
Graph replace_cubic_with_triangles(const Graph& g, const VertexSet& cubic);

}  // namespace gallai
