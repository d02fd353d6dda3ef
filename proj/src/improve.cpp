#include "gallai/improve.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "gallai/errors.hpp"
#include "gallai/invariants.hpp"

namespace gallai {

std::vector<int> AttachmentAnalysis::attachment_points() const {
  std::vector<int> out;
  for (int i : attachment_positions) out.push_back(path.vertices[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<VertexSet> off_path_components(const Graph& g, const PathSeq& p) {
  return components(g, g.vertices() - p.vertex_set());
}

AttachmentAnalysis attachment_analysis(const Graph& g, const PathSeq& p, const VertexSet& h) {
  if (!is_path(g, p.vertices)) throw PreconditionError("attachment_analysis: not a path");
  const VertexSet rest = g.vertices() - p.vertex_set();
  if (h.empty() || !h.is_subset_of(rest) || reachable(g, h.first(), rest) != h)
    throw PreconditionError("attachment_analysis: not a component of G - V(P)");
  AttachmentAnalysis out{p, h, {}, {}};
  VertexSet touch;
  for (int v : h) touch |= g.neighbors(v);
  int last = -1;
  for (int i = 0; i < p.order(); ++i) {
    if (touch.contains(p.vertices[static_cast<std::size_t>(i)])) {
      out.attachment_positions.push_back(i);
      out.rank.push_back(-1);
      last = i;
    } else {
      out.rank.push_back(last < 0 ? i : i - last - 1);
    }
  }
  return out;
}

namespace {

using Seq = std::vector<int>;

// Shortest path inside h from a neighbour of a to a neighbour of b.
std::optional<Seq> through(const Graph& g, const VertexSet& h, int a, int b) {
  std::vector<int> parent(static_cast<std::size_t>(g.order()), -2);
  std::vector<int> queue;
  for (int z : g.neighbors(a) & h) {
    parent[z] = -1;
    queue.push_back(z);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    if (g.adjacent(v, b)) {
      Seq out;
      for (int u = v; u != -1; u = parent[u]) out.push_back(u);
      std::reverse(out.begin(), out.end());
      return out;
    }
    for (int w : g.neighbors(v) & h) {
      if (parent[w] != -2) continue;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

// Spanning path of the complete graph on h from a neighbour of a to a
// neighbour of b (either endpoint may be -1 for "free").
std::optional<Seq> spanning(const Graph& g, const VertexSet& h, int a, int b) {
  auto ends_ok = [&](int z, int zz) {
    return (a < 0 || g.adjacent(a, z)) && (b < 0 || g.adjacent(b, zz)) && (h.size() == 1) == (z == zz);
  };
  for (int z : h) {
    for (int zz : h) {
      if (!ends_ok(z, zz)) continue;
      Seq out{z};
      for (int v : h)
        if (v != z && v != zz) out.push_back(v);
      if (zz != z) out.push_back(zz);
      return out;
    }
  }
  return std::nullopt;
}

bool is_clique(const Graph& g, const VertexSet& h) {
  for (int v : h)
    if (!(h - VertexSet::singleton(v)).is_subset_of(g.neighbors(v))) return false;
  return true;
}

void append_range(Seq& out, const Seq& p, int from, int to) {
  if (from <= to)
    for (int i = from; i <= to; ++i) out.push_back(p[static_cast<std::size_t>(i)]);
  else
    for (int i = from; i >= to; --i) out.push_back(p[static_cast<std::size_t>(i)]);
}

void append(Seq& out, const Seq& q) { out.insert(out.end(), q.begin(), q.end()); }

class Improver {
 public:
  explicit Improver(const Graph& g) : g_(g) {}

  Seq run(Seq p) {
    using Rule = std::optional<Seq> (Improver::*)(const Seq&);
    static constexpr Rule kRules[] = {
        &Improver::extend_end,       &Improver::rotate_end,       &Improver::consecutive_splice,
        &Improver::following_detour, &Improver::preceding_detour, &Improver::clique_end_splice,
        &Improver::clique_short_gap, &Improver::clique_detour,    &Improver::clique_head_swap,
    };
    bool changed = true;
    while (changed) {
      changed = false;
      for (Rule rule : kRules) {
        for (int side = 0; side < 2 && !changed; ++side) {
          Seq host = p;
          if (side) std::reverse(host.begin(), host.end());
          auto next = (this->*rule)(host);
          if (next && next->size() > p.size() && is_path(g_, *next)) {
            p = std::move(*next);
            changed = true;
          }
        }
        if (changed) break;
      }
    }
    return p;
  }

 private:
  struct Context {
    VertexSet h;
    AttachmentAnalysis info;
  };

  std::vector<Context> contexts(const Seq& p) const {
    std::vector<Context> out;
    PathSeq path{p};
    for (const auto& h : off_path_components(g_, path)) out.push_back({h, attachment_analysis(g_, path, h)});
    return out;
  }

  std::optional<Seq> extend_end(const Seq& p) {
    VertexSet off = g_.vertices() - VertexSet(std::span<const int>(p));
    int z = (g_.neighbors(p.back()) & off).first();
    if (z < 0) return std::nullopt;
    Seq out = p;
    out.push_back(z);
    return out;
  }

  std::optional<Seq> rotate_end(const Seq& p) {
    const int l = static_cast<int>(p.size()) - 1;
    VertexSet off = g_.vertices() - VertexSet(std::span<const int>(p));
    for (int i = 1; i < l; ++i) {
      int z = (g_.neighbors(p[i]) & off).first();
      if (z < 0 || !g_.adjacent(p[i - 1], p[l])) continue;
      Seq out;
      append_range(out, p, 0, i - 1);
      append_range(out, p, l, i);
      out.push_back(z);
      return out;
    }
    return std::nullopt;
  }

  std::optional<Seq> consecutive_splice(const Seq& p) {
    for (const auto& [h, info] : contexts(p)) {
      const auto& s = info.attachment_positions;
      for (std::size_t j = 0; j + 1 < s.size(); ++j) {
        if (s[j] + 1 != s[j + 1]) continue;
        auto q = through(g_, h, p[s[j]], p[s[j + 1]]);
        if (!q) continue;
        Seq out;
        append_range(out, p, 0, s[j]);
        append(out, *q);
        append_range(out, p, s[j + 1], static_cast<int>(p.size()) - 1);
        return out;
      }
    }
    return std::nullopt;
  }

  std::optional<Seq> following_detour(const Seq& p) {
    const int l = static_cast<int>(p.size()) - 1;
    for (const auto& [h, info] : contexts(p)) {
      for (int a : info.attachment_positions) {
        for (int b : info.attachment_positions) {
          if (b <= a + 1 || b + 1 > l || !g_.adjacent(p[a + 1], p[b + 1])) continue;
          auto q = through(g_, h, p[a], p[b]);
          if (!q) continue;
          Seq out;
          append_range(out, p, 0, a);
          append(out, *q);
          append_range(out, p, b, a + 1);
          append_range(out, p, b + 1, l);
          return out;
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Seq> preceding_detour(const Seq& p) {
    const int l = static_cast<int>(p.size()) - 1;
    for (const auto& [h, info] : contexts(p)) {
      for (int a : info.attachment_positions) {
        for (int b : info.attachment_positions) {
          if (a < 1 || b <= a + 1 || !g_.adjacent(p[a - 1], p[b - 1])) continue;
          auto q = through(g_, h, p[a], p[b]);
          if (!q) continue;
          Seq out;
          append_range(out, p, 0, a - 1);
          append_range(out, p, b - 1, a);
          append(out, *q);
          append_range(out, p, b, l);
          return out;
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Seq> clique_end_splice(const Seq& p) {
    const int l = static_cast<int>(p.size()) - 1;
    for (const auto& [h, info] : contexts(p)) {
      if (!is_clique(g_, h)) continue;
      const auto& s = info.attachment_positions;
      if (s.empty()) continue;
      if (s.back() == l) {
        if (auto q = spanning(g_, h, p[l], -1)) {
          Seq out = p;
          append(out, *q);
          return out;
        }
      }
      if (s.front() == 0) {
        if (auto q = spanning(g_, h, -1, p[0])) {
          Seq out = *q;
          append(out, p);
          return out;
        }
      }
      for (std::size_t j = 0; j + 1 < s.size(); ++j) {
        if (s[j] + 1 != s[j + 1]) continue;
        if (auto q = spanning(g_, h, p[s[j]], p[s[j + 1]])) {
          Seq out;
          append_range(out, p, 0, s[j]);
          append(out, *q);
          append_range(out, p, s[j + 1], l);
          return out;
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Seq> clique_short_gap(const Seq& p) {
    const int l = static_cast<int>(p.size()) - 1;
    for (const auto& [h, info] : contexts(p)) {
      if (!is_clique(g_, h)) continue;
      const auto& s = info.attachment_positions;
      if (s.empty()) continue;
      const int t = h.size();
      if (s.front() > 0 && s.front() < t) {
        if (auto q = spanning(g_, h, -1, p[s.front()])) {
          Seq out = *q;
          append_range(out, p, s.front(), l);
          return out;
        }
      }
      if (s.back() < l && l - s.back() < t) {
        if (auto q = spanning(g_, h, p[s.back()], -1)) {
          Seq out;
          append_range(out, p, 0, s.back());
          append(out, *q);
          return out;
        }
      }
      for (std::size_t j = 0; j + 1 < s.size(); ++j) {
        const int gap = s[j + 1] - s[j] - 1;
        if (gap < 1 || gap >= t) continue;
        if (auto q = spanning(g_, h, p[s[j]], p[s[j + 1]])) {
          Seq out;
          append_range(out, p, 0, s[j]);
          append(out, *q);
          append_range(out, p, s[j + 1], l);
          return out;
        }
      }
    }
    return std::nullopt;
  }

  // Index of the attachment point preceding position w, or -1.
  static int segment_of(const std::vector<int>& s, int w) {
    int seg = -1;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (s[j] < w) seg = static_cast<int>(j);
    return seg;
  }

  std::optional<Seq> clique_detour(const Seq& p) {
    const int l = static_cast<int>(p.size()) - 1;
    for (const auto& [h, info] : contexts(p)) {
      if (!is_clique(g_, h)) continue;
      const auto& s = info.attachment_positions;
      const int t = h.size();
      for (int w = 0; w <= l; ++w) {
        const int i = segment_of(s, w);
        if (info.rank[w] < 0 || i < 0) continue;
        for (int w2 = w + 1; w2 <= l; ++w2) {
          const int j = segment_of(s, w2);
          if (info.rank[w2] < 0 || j <= i || info.rank[w] + info.rank[w2] >= t) continue;
          if (!g_.adjacent(p[w], p[w2])) continue;
          auto q = spanning(g_, h, p[s[i]], p[s[j]]);
          if (!q) continue;
          Seq out;
          append_range(out, p, 0, s[i]);
          append(out, *q);
          append_range(out, p, s[j], w);
          append_range(out, p, w2, l);
          return out;
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Seq> clique_head_swap(const Seq& p) {
    const int l = static_cast<int>(p.size()) - 1;
    for (const auto& [h, info] : contexts(p)) {
      if (!is_clique(g_, h)) continue;
      const auto& s = info.attachment_positions;
      if (s.empty()) continue;
      const int t = h.size();
      for (int w = 0; w < s.front(); ++w) {
        for (int w2 = s.front() + 1; w2 <= l; ++w2) {
          const int j = segment_of(s, w2);
          if (info.rank[w2] < 0 || info.rank[w] + info.rank[w2] >= t) continue;
          if (!g_.adjacent(p[w], p[w2])) continue;
          auto q = spanning(g_, h, -1, p[s[j]]);
          if (!q) continue;
          Seq out = *q;
          append_range(out, p, s[j], w);
          append_range(out, p, w2, l);
          return out;
        }
      }
    }
    return std::nullopt;
  }

  const Graph& g_;
};

}  // namespace

PathSeq improve_path(const Graph& g, const PathSeq& p) {
  if (!is_path(g, p.vertices)) throw PreconditionError("improve_path: not a path");
  return {Improver(g).run(p.vertices)};
}

}  // namespace gallai
