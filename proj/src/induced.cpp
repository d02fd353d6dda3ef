#include "gallai/induced.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "gallai/errors.hpp"

namespace gallai {

namespace {

struct InducedSearch {
  const Graph& g;
  const Graph& h;
  std::vector<int> order;  // pattern vertices in assignment order
  std::vector<int> image;  // pattern vertex -> host vertex
  VertexSet used;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    detail::poll_deadline();
    const int p = order[depth];
    VertexSet cand = g.vertices() - used;
    for (std::size_t i = 0; i < depth; ++i) {
      int q = order[i];
      if (h.adjacent(p, q))
        cand &= g.neighbors(image[q]);
      else
        cand -= g.neighbors(image[q]);
    }
    for (int v : cand) {
      if (g.degree(v) < h.degree(p)) continue;
      image[p] = v;
      used.insert(v);
      if (extend(depth + 1)) return true;
      used.erase(v);
    }
    return false;
  }
};

}  // namespace

bool induced_contains(const Graph& g, const Graph& h) {
  if (h.order() > kMaxInducedPattern)
    throw PreconditionError("induced_contains pattern order exceeds " + std::to_string(kMaxInducedPattern));
  if (h.order() > g.order()) return false;
  if (h.order() == 0) return true;

  // Assign high-degree pattern vertices first, preferring neighbours of
  // already-placed ones so candidate sets shrink early.
  std::vector<int> order;
  VertexSet placed;
  while (static_cast<int>(order.size()) < h.order()) {
    int pick = -1;
    int best_links = -1;
    for (int v : h.vertices() - placed) {
      int links = (h.neighbors(v) & placed).size();
      if (pick == -1 || links > best_links || (links == best_links && h.degree(v) > h.degree(pick))) {
        pick = v;
        best_links = links;
      }
    }
    order.push_back(pick);
    placed.insert(pick);
  }
  InducedSearch search{g, h, order, std::vector<int>(static_cast<std::size_t>(h.order()), -1), {}};
  return search.extend(0);
}

Graph subdivide_edges(const Graph& g, const std::map<Edge, int>& lengths) {
  std::map<Edge, int> normalized;
  for (auto [e, len] : lengths) {
    auto [u, v] = e;
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= g.order() || u == v || !g.adjacent(u, v))
      throw PreconditionError("unknown edge key (" + std::to_string(e.first) + "," + std::to_string(e.second) + ")");
    if (len < 1) throw PreconditionError("subdivision length must be at least 1");
    normalized[{u, v}] = len;
  }
  int extra = 0;
  for (auto [e, len] : normalized) extra += len - 1;
  Graph out(g.order() + extra);
  int fresh = g.order();
  for (auto [u, v] : g.edges()) {
    auto it = normalized.find({u, v});
    int len = it == normalized.end() ? 1 : it->second;
    int prev = u;
    for (int i = 1; i < len; ++i) {
      out.add_edge(prev, fresh);
      prev = fresh++;
    }
    out.add_edge(prev, v);
  }
  return out;
}

Graph replace_cubic_with_triangles(const Graph& g, const VertexSet& cubic) {
  for (int w : cubic) {
    if (w >= g.order() || g.degree(w) != 3)
      throw PreconditionError("vertex " + std::to_string(w) + " is not cubic");
  }
  const int n = g.order();
  // corner[w][i] = vertex of T_w taking the edge to the i-th neighbour of w.
  std::vector<std::array<int, 3>> corner(static_cast<std::size_t>(n));
  int fresh = n;
  for (int w : cubic) corner[w] = {w, fresh++, fresh++};
  Graph out(fresh);
  auto endpoint = [&](int w, int other) {
    if (!cubic.contains(w)) return w;
    auto nbrs = g.neighbors(w).to_vector();
    auto idx = std::find(nbrs.begin(), nbrs.end(), other) - nbrs.begin();
    return corner[w][static_cast<std::size_t>(idx)];
  };
  for (int w : cubic) {
    out.add_edge(corner[w][0], corner[w][1]);
    out.add_edge(corner[w][0], corner[w][2]);
    out.add_edge(corner[w][1], corner[w][2]);
  }
  for (auto [u, v] : g.edges()) out.add_edge(endpoint(u, v), endpoint(v, u));
  return out;
}

}  // namespace gallai
