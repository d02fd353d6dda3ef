#include "gallai/subdivision.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "gallai/errors.hpp"

namespace gallai {

int MultigraphPattern::degree(int v) const {
  int d = 0;
  for (auto [a, b] : edges) d += (a == v) + (b == v);
  return d;
}

bool MultigraphPattern::is_connected() const {
  if (order <= 1) return true;
  std::vector<int> root(static_cast<std::size_t>(order));
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (auto [a, b] : edges) root[find(a)] = find(b);
  for (int v = 1; v < order; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

MultigraphPattern MultigraphPattern::path_pattern() { return {2, {{0, 1}}}; }

MultigraphPattern MultigraphPattern::cycle_pattern() { return {2, {{0, 1}, {0, 1}}}; }

MultigraphPattern MultigraphPattern::complete(int k) {
  MultigraphPattern r{k, {}};
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) r.edges.emplace_back(u, v);
  return r;
}

std::vector<MultigraphPattern> patterns_with_edges(int m) {
  if (m == 1) return {{2, {{0, 1}}}, {1, {{0, 0}}}};
  if (m == 2)
    return {
        {3, {{0, 1}, {1, 2}}}, {4, {{0, 1}, {2, 3}}}, {2, {{0, 1}, {0, 1}}}, {2, {{0, 0}, {0, 1}}},
        {3, {{0, 0}, {1, 2}}}, {1, {{0, 0}, {0, 0}}}, {2, {{0, 0}, {1, 1}}},
    };
  throw PreconditionError("patterns_with_edges supports m = 1 or 2");
}

VertexSet SubdivisionEmbedding::vertex_set() const {
  VertexSet s{std::span<const int>(branch)};
  for (const auto& p : edge_paths) s |= p.vertex_set();
  return s;
}

bool is_subdivision(const Graph& g, const MultigraphPattern& r, const SubdivisionEmbedding& e) {
  if (static_cast<int>(e.branch.size()) != r.order || e.edge_paths.size() != r.edges.size()) return false;
  VertexSet used;
  for (int v : e.branch) {
    if (v < 0 || v >= g.order() || used.contains(v)) return false;
    used.insert(v);
  }
  std::set<Edge> direct;
  for (std::size_t i = 0; i < r.edges.size(); ++i) {
    auto [a, b] = r.edges[i];
    const auto& seq = e.edge_paths[i].vertices;
    if (a == b) {
      if (!is_cycle(g, seq) || seq.front() != e.branch[a]) return false;
      for (std::size_t j = 1; j < seq.size(); ++j) {
        if (used.contains(seq[j])) return false;
        used.insert(seq[j]);
      }
      continue;
    }
    if (!is_path(g, seq) || seq.size() < 2) return false;
    if (seq.front() != e.branch[a] || seq.back() != e.branch[b]) return false;
    if (seq.size() == 2) {
      Edge key = std::minmax(seq[0], seq[1]);
      if (!direct.insert(key).second) return false;
    }
    for (std::size_t j = 1; j + 1 < seq.size(); ++j) {
      if (used.contains(seq[j])) return false;
      used.insert(seq[j]);
    }
  }
  return true;
}

namespace {

class SubdivisionSearch {
 public:
  SubdivisionSearch(const Graph& g, const MultigraphPattern& r, std::unordered_set<VertexSet, VertexSetHash>* sets,
                    std::size_t cap)
      : g_(g), r_(r), sets_(sets), cap_(cap) {
    vorder_.resize(static_cast<std::size_t>(r.order));
    std::iota(vorder_.begin(), vorder_.end(), 0);
    std::stable_sort(vorder_.begin(), vorder_.end(), [&](int a, int b) { return r.degree(a) > r.degree(b); });
    eorder_.resize(r.edges.size());
    std::iota(eorder_.begin(), eorder_.end(), 0);
    std::stable_sort(eorder_.begin(), eorder_.end(), [&](int i, int j) {
      auto [a, b] = r.edges[static_cast<std::size_t>(i)];
      auto [c, d] = r.edges[static_cast<std::size_t>(j)];
      return r.degree(a) + r.degree(b) > r.degree(c) + r.degree(d);
    });
    branch_.assign(static_cast<std::size_t>(r.order), -1);
    paths_.resize(r.edges.size());
  }

  void run() { place(0); }

  int best() const { return best_; }
  const std::optional<SubdivisionEmbedding>& best_embedding() const { return best_embedding_; }

 private:
  bool prunable(int bound) const { return sets_ ? bound < best_ : bound <= best_; }

  void record() {
    const int size = used_.size();
    if (size > best_) {
      best_ = size;
      best_embedding_ = SubdivisionEmbedding{branch_, paths_};
      if (sets_) sets_->clear();
    }
    if (sets_ && size == best_) {
      sets_->insert(used_);
      if (sets_->size() > cap_) throw CapExceeded("R-subdivision enumeration exceeded result cap");
    }
  }

  void place(std::size_t i) {
    if (prunable(g_.order())) return;
    if (i == vorder_.size()) {
      embed(0);
      return;
    }
    const int p = vorder_[i];
    const int need = r_.degree(p);
    for (int v : g_.vertices() - used_) {
      if (g_.degree(v) < need) continue;
      branch_[p] = v;
      used_.insert(v);
      place(i + 1);
      used_.erase(v);
      branch_[p] = -1;
    }
  }

  // Vertices still usable by the edges from index k on, with `extra` also
  // active (the tip of a path under construction).
  int bound(std::size_t k, int extra) const {
    VertexSet active;
    if (extra >= 0) active.insert(extra);
    for (std::size_t j = k; j < eorder_.size(); ++j) {
      auto [a, b] = r_.edges[static_cast<std::size_t>(eorder_[j])];
      active.insert(branch_[a]);
      active.insert(branch_[b]);
    }
    const VertexSet avail = g_.vertices() - used_;
    VertexSet frontier;
    for (int v : active) frontier |= g_.neighbors(v);
    frontier &= avail;
    VertexSet seen = frontier;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g_.neighbors(v);
      frontier = (next & avail) - seen;
      seen |= frontier;
    }
    return used_.size() + seen.size();
  }

  void embed(std::size_t k) {
    detail::poll_deadline();
    if (k == eorder_.size()) {
      record();
      return;
    }
    if (prunable(bound(k, -1))) return;
    const int idx = eorder_[k];
    auto [a, b] = r_.edges[static_cast<std::size_t>(idx)];
    const int s = branch_[a];
    const int t = branch_[b];
    auto& seq = paths_[static_cast<std::size_t>(idx)].vertices;
    seq.assign(1, s);
    if (a != b && g_.adjacent(s, t)) {
      Edge key = std::minmax(s, t);
      if (direct_.insert(key).second) {
        seq.push_back(t);
        embed(k + 1);
        seq.pop_back();
        direct_.erase(key);
      }
    }
    extend(k, a == b ? -1 : t);
  }

  // Grows paths_[eorder_[k]] through unused vertices towards `target`
  // (or back to its start when target is -1, for a loop).
  void extend(std::size_t k, int target) {
    detail::poll_deadline();
    auto& seq = paths_[static_cast<std::size_t>(eorder_[k])].vertices;
    const int tip = seq.back();
    if (prunable(bound(k + 1, tip))) return;
    for (int u : g_.neighbors(tip) - used_) {
      seq.push_back(u);
      used_.insert(u);
      if (target >= 0 && g_.adjacent(u, target)) {
        seq.push_back(target);
        embed(k + 1);
        seq.pop_back();
      }
      if (target < 0 && seq.size() >= 3 && g_.adjacent(u, seq.front()) && seq[1] < u) embed(k + 1);
      extend(k, target);
      used_.erase(u);
      seq.pop_back();
    }
  }

  const Graph& g_;
  const MultigraphPattern& r_;
  std::unordered_set<VertexSet, VertexSetHash>* sets_;
  std::size_t cap_;
  std::vector<int> vorder_;
  std::vector<int> eorder_;
  std::vector<int> branch_;
  std::vector<PathSeq> paths_;
  VertexSet used_;
  std::set<Edge> direct_;
  int best_ = 0;
  std::optional<SubdivisionEmbedding> best_embedding_;
};

void check_pattern(const MultigraphPattern& r) {
  if (r.edges.empty()) throw PreconditionError("pattern must have at least one edge");
  for (auto [a, b] : r.edges)
    if (a < 0 || b < 0 || a >= r.order || b >= r.order) throw PreconditionError("pattern edge out of range");
}

}  // namespace

std::optional<SubdivisionEmbedding> max_R_subdivision(const Graph& g, const MultigraphPattern& r) {
  check_pattern(r);
  if (r.order > g.order()) return std::nullopt;
  SubdivisionSearch search(g, r, nullptr, 0);
  search.run();
  return search.best_embedding();
}

std::vector<VertexSet> enumerate_max_R_subdivisions(const Graph& g, const MultigraphPattern& r,
                                                    std::size_t result_cap) {
  check_pattern(r);
  if (r.order > g.order()) return {};
  std::unordered_set<VertexSet, VertexSetHash> sets;
  SubdivisionSearch search(g, r, &sets, result_cap);
  search.run();
  std::vector<VertexSet> out(sets.begin(), sets.end());
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace gallai
