#pragma once

#include <optional>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

/// Connected components, each sorted, ordered by minimum vertex.
std::vector<VertexSet> components(const Graph& g);
/// Components of g[within].
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);
/// Vertices reachable from `start` inside `within` (start included).
VertexSet reachable(const Graph& g, int start, const VertexSet& within);

/// True for n <= 1 as well.
bool is_connected(const Graph& g);

/// Maximum independent set by branch and bound with a greedy-colouring bound.
/// Among maximum sets the lexicographically least is returned.
VertexSet maximum_independent_set(const Graph& g);
int alpha(const Graph& g);

/// Maximum number of internally disjoint s-t paths for nonadjacent s != t.
/// Stops counting at `limit`.
int local_connectivity(const Graph& g, int s, int t, int limit = 1 << 20);

/// Vertex connectivity: n-1 for complete graphs, 0 when disconnected or n <= 1.
int kappa(const Graph& g);

/// Shortest cycle length; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Acyclic with maximum degree at most 2.
bool is_linear_forest(const Graph& g);

/// Component orders of a linear forest, sorted descending.
std::vector<int> linear_forest_type(const Graph& g);

bool is_regular(const Graph& g);

}  // namespace gallai
