#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

/// Ordered vertex sequence of a path in a host graph.
struct PathSeq {
  std::vector<int> vertices;

  int order() const { return static_cast<int>(vertices.size()); }
  /// Edge count; -1 for the empty sequence.
  int length() const { return order() - 1; }
  VertexSet vertex_set() const { return VertexSet(std::span<const int>(vertices)); }
  PathSeq reversed() const { return {{vertices.rbegin(), vertices.rend()}}; }
  friend bool operator==(const PathSeq&, const PathSeq&) = default;
};

/// Cyclic vertex sequence stored canonically: minimum vertex first, the
/// smaller of its two cycle neighbours second.
struct CycleSeq {
  std::vector<int> vertices;

  static CycleSeq canonical(std::vector<int> cyclic);
  int order() const { return static_cast<int>(vertices.size()); }
  VertexSet vertex_set() const { return VertexSet(std::span<const int>(vertices)); }
  friend bool operator==(const CycleSeq&, const CycleSeq&) = default;
};

bool is_path(const Graph& g, std::span<const int> seq);
bool is_cycle(const Graph& g, std::span<const int> seq);

enum class SearchMethod {
  Auto,        ///< subset DP on small instances, pruned DFS otherwise
  SubsetDP,    ///< endpoint x subset dynamic programming
  DepthFirst,  ///< DFS with block-cutpoint-tree reachability bounds
};

/// Largest instance the subset DP accepts.
inline constexpr int kSubsetDPLimit = 24;
inline constexpr std::size_t kDefaultResultCap = 1'000'000;
/// Sentinel for "no size cap" on cycle searches.
inline constexpr int kNoCap = kMaxVertices;

struct EnumerationOptions {
  SearchMethod method = SearchMethod::Auto;
  std::size_t result_cap = kDefaultResultCap;
};

/// Maximum number of vertices on a path of g[within] (0 if within is empty).
int longest_path_length(const Graph& g, SearchMethod method = SearchMethod::Auto);
int longest_path_length(const Graph& g, const VertexSet& within, SearchMethod method = SearchMethod::Auto);
/// One maximum path of g[within]; empty when within is empty.
PathSeq longest_path(const Graph& g, const VertexSet& within, SearchMethod method = SearchMethod::Auto);

/// Distinct vertex sets of the longest paths, sorted lexicographically.
/// Throws CapExceeded past options.result_cap sets.
std::vector<VertexSet> enumerate_longest_paths(const Graph& g, const EnumerationOptions& options = {});
std::vector<VertexSet> enumerate_longest_paths(const Graph& g, const VertexSet& within,
                                               const EnumerationOptions& options = {});

/// Largest cycle order in g[within] among cycles of at most max_order
/// vertices; nullopt when there is none.
std::optional<int> longest_cycle_length(const Graph& g, SearchMethod method = SearchMethod::Auto);
std::optional<int> longest_cycle_length(const Graph& g, const VertexSet& within, int max_order = kNoCap,
                                        SearchMethod method = SearchMethod::Auto);
std::optional<CycleSeq> longest_cycle(const Graph& g, const VertexSet& within, int max_order = kNoCap,
                                      SearchMethod method = SearchMethod::Auto);

/// Distinct vertex sets of the longest cycles, sorted lexicographically;
/// empty for forests.
std::vector<VertexSet> enumerate_longest_cycles(const Graph& g, const EnumerationOptions& options = {});
std::vector<VertexSet> enumerate_longest_cycles(const Graph& g, const VertexSet& within,
                                                const EnumerationOptions& options = {});

/// Longest path with endpoint x, oriented from x; among optima the
/// lexicographically least vertex sequence.
PathSeq x_fiber(const Graph& g, int x);
/// Longest x-y path, oriented from x, lexicographically least among optima;
/// nullopt when x and y lie in different components.
std::optional<PathSeq> xy_fiber(const Graph& g, int x, int y);

/// Upper bound on the order of a path starting at `start` whose other
/// vertices lie in `avail`: the heaviest root-to-leaf walk in the
/// block-cutpoint tree of g[avail + start] rooted at start.
int path_extent_bound(const Graph& g, int start, const VertexSet& avail);
/// Upper bound on the order of a start-target path with interior in `avail`
/// (target must be in avail): the blocks on the tree path between them.
/// Returns 0 when target is unreachable.
int path_chain_bound(const Graph& g, int start, int target, const VertexSet& avail);

}  // namespace gallai
