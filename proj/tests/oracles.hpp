#pragma once

// Brute-force reference implementations. They share nothing with the
// library beyond reading adjacency through Graph::adjacent.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gallai/graph.hpp"

namespace oracle {

using Mask = std::uint32_t;
using gallai::Graph;

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) a[u][v] = u != v && g.adjacent(u, v);
  return a;
}

inline Mask to_mask(const gallai::VertexSet& s) {
  Mask m = 0;
  for (int v : s) m |= Mask{1} << v;
  return m;
}

inline int popcount(Mask m) { return __builtin_popcount(m); }

struct Optima {
  int order = 0;
  std::set<Mask> sets;
};

// Every simple path, walked naively from every start vertex.
inline Optima longest_paths(const Graph& g, Mask within = ~Mask{0}) {
  const auto a = matrix(g);
  const int n = g.order();
  Optima best;
  std::function<void(int, Mask, int)> walk = [&](int v, Mask used, int len) {
    if (len > best.order) {
      best.order = len;
      best.sets.clear();
    }
    if (len == best.order) best.sets.insert(used);
    for (int u = 0; u < n; ++u)
      if (a[v][u] && !(used >> u & 1) && (within >> u & 1)) walk(u, used | Mask{1} << u, len + 1);
  };
  for (int v = 0; v < n; ++v)
    if (within >> v & 1) walk(v, Mask{1} << v, 1);
  return best;
}

// Every cycle (order >= 3), closed back to its start vertex.
inline Optima longest_cycles(const Graph& g, Mask within = ~Mask{0}, int max_order = 1 << 20) {
  const auto a = matrix(g);
  const int n = g.order();
  Optima best;
  std::function<void(int, int, Mask, int)> walk = [&](int s, int v, Mask used, int len) {
    if (len >= 3 && a[v][s] && len <= max_order) {
      if (len > best.order) {
        best.order = len;
        best.sets.clear();
      }
      if (len == best.order) best.sets.insert(used);
    }
    for (int u = s + 1; u < n; ++u)
      if (a[v][u] && !(used >> u & 1) && (within >> u & 1)) walk(s, u, used | Mask{1} << u, len + 1);
  };
  for (int s = 0; s < n; ++s)
    if (within >> s & 1) walk(s, s, Mask{1} << s, 1);
  return best;
}

inline bool independent(const std::vector<std::vector<bool>>& a, Mask m) {
  for (int u = 0; u < static_cast<int>(a.size()); ++u)
    for (int v = u + 1; v < static_cast<int>(a.size()); ++v)
      if ((m >> u & 1) && (m >> v & 1) && a[u][v]) return false;
  return true;
}

inline int alpha(const Graph& g) {
  const auto a = matrix(g);
  int best = 0;
  for (Mask m = 0; m < (Mask{1} << g.order()); ++m)
    if (independent(a, m)) best = std::max(best, popcount(m));
  return best;
}

inline bool connected(const std::vector<std::vector<bool>>& a, Mask keep) {
  if (keep == 0) return true;
  const int n = static_cast<int>(a.size());
  Mask seen = keep & (~keep + 1);
  for (bool grew = true; grew;) {
    grew = false;
    for (int u = 0; u < n; ++u)
      if (seen >> u & 1)
        for (int v = 0; v < n; ++v)
          if ((keep >> v & 1) && !(seen >> v & 1) && a[u][v]) {
            seen |= Mask{1} << v;
            grew = true;
          }
  }
  return seen == keep;
}

// Fewest deletions leaving a disconnected graph or a single vertex.
inline int kappa(const Graph& g) {
  const int n = g.order();
  const auto a = matrix(g);
  const Mask all = (Mask{1} << n) - 1;
  for (int k = 0; k < n; ++k)
    for (Mask s = 0; s <= all; ++s) {
      if (popcount(s) != k) continue;
      const Mask rest = all & ~s;
      if (popcount(rest) <= 1 || !connected(a, rest)) return k;
    }
  return n - 1;
}

// Injective maps of h's vertices into g that preserve adjacency and
// non-adjacency.
inline bool induced_contains(const Graph& g, const Graph& h) {
  const int n = g.order();
  const int k = h.order();
  if (k > n) return false;
  std::vector<int> image(k);
  std::vector<bool> used(n);
  std::function<bool(int)> place = [&](int i) {
    if (i == k) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = g.adjacent(v, image[j]) == h.adjacent(i, j);
      if (!ok) continue;
      used[v] = true;
      image[i] = v;
      if (place(i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return place(0);
}

// Lexicographically least (by sorted member list) minimum hitting set.
inline std::pair<int, Mask> min_hitting_set(const std::set<Mask>& edges, int n) {
  std::vector<Mask> best;
  for (int k = 0; k <= n; ++k) {
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
      if (popcount(s) != k) continue;
      bool hits = true;
      for (Mask e : edges) hits = hits && (e & s);
      if (hits) best.push_back(s);
    }
    if (!best.empty()) {
      auto members = [](Mask m) {
        std::vector<int> v;
        for (int i = 0; i < 32; ++i)
          if (m >> i & 1) v.push_back(i);
        return v;
      };
      return {k, *std::min_element(best.begin(), best.end(),
                                   [&](Mask x, Mask y) { return members(x) < members(y); })};
    }
  }
  return {-1, 0};
}

// Smallest vertex set meeting every X-Y path (members of X and Y allowed).
inline int min_separator(const Graph& g, Mask x, Mask y) {
  const int n = g.order();
  const auto a = matrix(g);
  for (int k = 0; k <= n; ++k)
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
      if (popcount(s) != k) continue;
      Mask seen = x & ~s;
      for (bool grew = true; grew;) {
        grew = false;
        for (int u = 0; u < n; ++u)
          if (seen >> u & 1)
            for (int v = 0; v < n; ++v)
              if (a[u][v] && !(s >> v & 1) && !(seen >> v & 1)) {
                seen |= Mask{1} << v;
                grew = true;
              }
      }
      if (!(seen & y)) return k;
    }
  return n;
}

// Independent graph6 encoder (n < 63).
inline std::string graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(63 + n));
  int bits = 0;
  int acc = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = acc << 1 | (g.adjacent(u, v) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(63 + acc);
        bits = acc = 0;
      }
    }
  if (bits) out += static_cast<char>(63 + (acc << (6 - bits)));
  return out;
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Random spanning tree plus `extra` random edges.
inline Graph random_connected(std::mt19937& rng, int n, int extra) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < extra; ++i) {
    const int u = pick(rng);
    const int v = pick(rng);
    if (u != v) g.add_edge(u, v);
  }
  return g;
}

}  // namespace oracle
