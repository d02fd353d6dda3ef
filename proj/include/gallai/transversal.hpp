#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gallai/graph.hpp"
#include "gallai/paths.hpp"
#include "gallai/subdivision.hpp"

namespace gallai {

struct HittingSet {
  int size = 0;
  VertexSet witness;  ///< lexicographically least among minimum hitting sets
};

/// Exact minimum hitting set of a hypergraph whose edges are non-empty.
HittingSet minimum_hitting_set(std::span<const VertexSet> edges);

/// Vertices lying on every longest path. Throws PreconditionError when g is
/// disconnected.
VertexSet gallai_vertices(const Graph& g, const EnumerationOptions& options = {});

/// Minimum number of vertices meeting every longest path.
HittingSet lpt_exact(const Graph& g, const EnumerationOptions& options = {});
/// Minimum number of vertices meeting every longest cycle. Throws
/// PreconditionError on forests.
HittingSet lct_exact(const Graph& g, const EnumerationOptions& options = {});

struct SeparatorConnector {
  VertexSet separator;  ///< lexicographically least minimum separator
  std::vector<PathSeq> connector;
  int size = 0;
};

/// Minimum (X,Y)-separator and maximum (X,Y)-connector of g[within]. The
/// separator may use vertices of X and Y; connector paths have interiors
/// outside X and Y and are pairwise vertex-disjoint.
SeparatorConnector menger(const Graph& g, const VertexSet& x, const VertexSet& y);
SeparatorConnector menger(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& within);

/// A block containing an edge of every longest path (for a one-vertex block:
/// met by every longest path), lexicographically least; nullopt if none.
std::optional<VertexSet> find_special_block(const Graph& g, const EnumerationOptions& options = {});

/// True iff the maximum R-subdivisions of g pairwise share a vertex.
bool pairwise_intersecting(const Graph& g, const MultigraphPattern& r,
                           std::size_t result_cap = kDefaultResultCap);

enum class Objective { LongestPath, LongestCycle };

/// Number of edges of the pattern realising the objective (1 or 2).
int objective_edges(Objective objective);
const char* objective_name(Objective objective);

/// Largest optimum order inside g[within] (0 if none).
int optimum_within(const Graph& g, Objective objective, const VertexSet& within);

/// True iff t meets every optimum of g.
bool validate_transversal(const Graph& g, Objective objective, const VertexSet& t);

/// ceil(8 m^{5/4} n^{3/4}), computed exactly.
long long sublinear_bound(int n, int m);

struct SublinearOptions {
  /// Replaces the default epsilon = 2 (m/n)^{1/4}; converted exactly.
  std::optional<double> epsilon;
  /// Throw instead of falling back when the unreachable branch is hit.
  bool strict = false;
};

struct IterationEvent {
  char step = 'a';     ///< iteration step 'a'..'e'
  std::string action;  ///< e.g. "split", "shrink", "return"
  int h_order = 0;     ///< order of the current subgraph H
  int y_size = 0;
  int value = 0;       ///< step-specific size (path, separator or cycle order)
};

struct SublinearResult {
  VertexSet transversal;
  std::vector<IterationEvent> trace;
  std::optional<std::string> diagnostic;
  int optimum = 0;
  long long bound = 0;
  std::string epsilon4;  ///< exact epsilon^4 as "p/q"
};

/// Thrown in strict mode when the iteration reaches a branch that the
/// correctness argument rules out.
class UnreachableBranch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Shrinking partial-transversal iteration producing a transversal of the
/// longest paths (connected g) or longest cycles (2-connected g). Other
/// inputs are accepted when their optima are checked to pairwise intersect.
SublinearResult sublinear_transversal(const Graph& g, Objective objective, const SublinearOptions& options = {});

}  // namespace gallai
