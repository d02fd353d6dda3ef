#include "gallai/invariants.hpp"

#include <algorithm>
#include <deque>

#include "gallai/errors.hpp"
#include "gallai/flow.hpp"

namespace gallai {

VertexSet reachable(const Graph& g, int start, const VertexSet& within) {
  VertexSet seen = VertexSet::singleton(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next &= within;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet left = within & g.vertices();
  while (!left.empty()) {
    VertexSet comp = reachable(g, left.first(), left);
    left -= comp;
    out.push_back(comp);
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return reachable(g, 0, g.vertices()).size() == g.order();
}

namespace {

// Greedy partition of `cand` into cliques; an independent set takes at most
// one vertex from each.
int clique_cover_bound(const Graph& g, VertexSet cand) {
  int cliques = 0;
  while (!cand.empty()) {
    VertexSet pool = cand;
    while (!pool.empty()) {
      int v = pool.first();
      cand.erase(v);
      pool &= g.neighbors(v);
    }
    ++cliques;
  }
  return cliques;
}

struct IndependentSetSearch {
  const Graph& g;
  VertexSet best;
  int best_size = -1;

  void run(VertexSet cand, VertexSet cur, int cur_size) {
    detail::poll_deadline();
    if (cand.empty()) {
      if (cur_size > best_size) {
        best = cur;
        best_size = cur_size;
      }
      return;
    }
    if (cur_size + clique_cover_bound(g, cand) <= best_size) return;
    int v = cand.first();
    VertexSet with = cur;
    with.insert(v);
    VertexSet rest = cand - g.neighbors(v);
    rest.erase(v);
    run(rest, with, cur_size + 1);
    cand.erase(v);
    run(cand, cur, cur_size);
  }
};

}  // namespace

VertexSet maximum_independent_set(const Graph& g) {
  IndependentSetSearch search{g, {}, -1};
  search.run(g.vertices(), {}, 0);
  return search.best;
}

int alpha(const Graph& g) { return maximum_independent_set(g).size(); }

int local_connectivity(const Graph& g, int s, int t, int limit) {
  if (s == t || g.adjacent(s, t)) throw PreconditionError("local_connectivity needs distinct nonadjacent vertices");
  const int n = g.order();
  FlowNetwork net(2 * n);
  for (int v = 0; v < n; ++v)
    net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? FlowNetwork::kInfinite : 1);
  for (auto [u, v] : g.edges()) {
    net.add_arc(2 * u + 1, 2 * v, FlowNetwork::kInfinite);
    net.add_arc(2 * v + 1, 2 * u, FlowNetwork::kInfinite);
  }
  return net.max_flow(2 * s + 1, 2 * t, limit);
}

int kappa(const Graph& g) {
  const int n = g.order();
  if (n <= 1 || !is_connected(g)) return 0;
  if (g.size() == n * (n - 1) / 2) return n - 1;
  int best = g.min_degree();
  // Some vertex among the first best+1 avoids a minimum separator.
  for (int i = 0; i <= best && i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      best = std::min(best, local_connectivity(g, i, j, best));
    }
  }
  return best;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = n + 1;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

bool is_linear_forest(const Graph& g) {
  if (g.max_degree() > 2) return false;
  return g.size() == g.order() - static_cast<int>(components(g).size());
}

std::vector<int> linear_forest_type(const Graph& g) {
  std::vector<int> sizes;
  for (const auto& c : components(g)) sizes.push_back(c.size());
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

bool is_regular(const Graph& g) { return g.max_degree() == g.min_degree(); }

}  // namespace gallai
