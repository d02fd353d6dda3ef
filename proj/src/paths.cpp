#include "gallai/paths.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>

#include "gallai/errors.hpp"

namespace gallai {

CycleSeq CycleSeq::canonical(std::vector<int> cyclic) {
  if (cyclic.empty()) return {};
  auto min_it = std::min_element(cyclic.begin(), cyclic.end());
  std::rotate(cyclic.begin(), min_it, cyclic.end());
  if (cyclic.size() > 2 && cyclic.back() < cyclic[1]) std::reverse(cyclic.begin() + 1, cyclic.end());
  return {std::move(cyclic)};
}

bool is_path(const Graph& g, std::span<const int> seq) {
  if (seq.empty()) return false;
  VertexSet seen;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    int v = seq[i];
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
    if (i > 0 && !g.adjacent(seq[i - 1], v)) return false;
  }
  return true;
}

bool is_cycle(const Graph& g, std::span<const int> seq) {
  return seq.size() >= 3 && is_path(g, seq) && g.adjacent(seq.front(), seq.back());
}

// ---------------------------------------------------------------------------
// Block-cutpoint tree bounds.

namespace {

struct BlockWalk {
  int extent = 0;  // max order of a path starting at the root
  int chain = 0;   // max order of a root-target path (0 if unreachable)
};

struct BlockScratch {
  std::array<unsigned, kMaxVertices> stamp{};
  std::array<int, kMaxVertices> disc{};
  std::array<int, kMaxVertices> low{};
  std::array<int, kMaxVertices> parent{};
  std::array<int, kMaxVertices> parent_block{};
  std::array<int, kMaxVertices> gain{};
  std::array<int, kMaxVertices> block_top{};
  std::array<int, kMaxVertices> block_size{};
  std::vector<int> vstack;
  std::vector<std::pair<int, int>> frames;
  unsigned current = 0;
};

thread_local BlockScratch t_scratch;

BlockWalk block_walk(const Graph& g, int root, const VertexSet& allowed, int target) {
  BlockScratch& s = t_scratch;
  if (++s.current == 0) {
    s.stamp.fill(0);
    s.current = 1;
  }
  const unsigned mark = s.current;
  int clock = 0;
  int blocks = 0;
  auto visit = [&](int v, int from) {
    s.stamp[v] = mark;
    s.disc[v] = s.low[v] = clock++;
    s.parent[v] = from;
    s.gain[v] = 0;
    s.vstack.push_back(v);
    s.frames.emplace_back(v, -1);
  };
  s.vstack.clear();
  s.frames.clear();
  visit(root, -1);
  while (!s.frames.empty()) {
    auto& [v, cursor] = s.frames.back();
    int w = (g.neighbors(v) & allowed).next(cursor);
    if (w != -1) {
      cursor = w;
      if (s.stamp[w] != mark) {
        visit(w, v);
      } else if (w != s.parent[v]) {
        s.low[v] = std::min(s.low[v], s.disc[w]);
      }
      continue;
    }
    int child = v;
    s.frames.pop_back();
    if (s.frames.empty()) break;
    int up = s.frames.back().first;
    s.low[up] = std::min(s.low[up], s.low[child]);
    if (s.low[child] >= s.disc[up]) {
      int b = blocks++;
      int size = 1;
      int best_child = 0;
      while (true) {
        int x = s.vstack.back();
        s.vstack.pop_back();
        ++size;
        s.parent_block[x] = b;
        best_child = std::max(best_child, s.gain[x]);
        if (x == child) break;
      }
      s.block_top[b] = up;
      s.block_size[b] = size;
      s.gain[up] = std::max(s.gain[up], size - 1 + best_child);
    }
  }
  BlockWalk out;
  out.extent = 1 + s.gain[root];
  if (target == root) {
    out.chain = 1;
  } else if (target >= 0 && s.stamp[target] == mark) {
    int sum = 0;
    int b = s.parent_block[target];
    while (true) {
      sum += s.block_size[b] - 1;
      int top = s.block_top[b];
      if (top == root) break;
      b = s.parent_block[top];
    }
    out.chain = 1 + sum;
  }
  return out;
}

}  // namespace

int path_extent_bound(const Graph& g, int start, const VertexSet& avail) {
  VertexSet allowed = avail;
  allowed.insert(start);
  return block_walk(g, start, allowed, -1).extent;
}

int path_chain_bound(const Graph& g, int start, int target, const VertexSet& avail) {
  VertexSet allowed = avail;
  allowed.insert(start);
  allowed.insert(target);
  return block_walk(g, start, allowed, target).chain;
}

// ---------------------------------------------------------------------------
// Subset dynamic programming over (vertex subset, endpoint).

namespace {

struct Local {
  std::vector<int> label;      // local index -> graph vertex
  std::vector<uint32_t> adj;   // local adjacency masks
  int k = 0;
  uint32_t full = 0;

  Local(const Graph& g, const VertexSet& within) {
    label = (within & g.vertices()).to_vector();
    k = static_cast<int>(label.size());
    if (k > kSubsetDPLimit)
      throw CapExceeded("subset DP limited to " + std::to_string(kSubsetDPLimit) + " vertices");
    std::array<int, kMaxVertices> local{};
    local.fill(-1);
    for (int i = 0; i < k; ++i) local[label[i]] = i;
    adj.assign(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i)
      for (int w : g.neighbors(label[i]))
        if (local[w] >= 0) adj[i] |= uint32_t{1} << local[w];
    full = k == 32 ? ~uint32_t{0} : ((uint32_t{1} << k) - 1);
  }

  VertexSet to_set(uint32_t mask) const {
    VertexSet s;
    for (; mask; mask &= mask - 1) s.insert(label[std::countr_zero(mask)]);
    return s;
  }
};

// reach[mask] = endpoints of paths with vertex set exactly mask.
std::vector<uint32_t> path_table(const Local& L) {
  std::vector<uint32_t> reach(std::size_t{1} << L.k, 0);
  for (int v = 0; v < L.k; ++v) reach[uint32_t{1} << v] = uint32_t{1} << v;
  for (uint32_t mask = 1; mask <= L.full && mask != 0; ++mask) {
    if ((mask & 0xfffU) == 0) detail::poll_deadline();
    const uint32_t ends = reach[mask];
    if (!ends) continue;
    for (uint32_t rest = L.full & ~mask; rest; rest &= rest - 1) {
      int u = std::countr_zero(rest);
      if (L.adj[u] & ends) reach[mask | (uint32_t{1} << u)] |= uint32_t{1} << u;
    }
  }
  return reach;
}

// cyc[mask] = endpoints of paths with vertex set mask starting at its lowest
// member, restricted to at most max_order vertices.
std::vector<uint32_t> cycle_table(const Local& L, int max_order) {
  std::vector<uint32_t> cyc(std::size_t{1} << L.k, 0);
  for (int v = 0; v < L.k; ++v) cyc[uint32_t{1} << v] = uint32_t{1} << v;
  for (uint32_t mask = 1; mask <= L.full && mask != 0; ++mask) {
    if ((mask & 0xfffU) == 0) detail::poll_deadline();
    const uint32_t ends = cyc[mask];
    if (!ends || std::popcount(mask) >= max_order) continue;
    const int s = std::countr_zero(mask);
    const uint32_t above = ~((uint32_t{2} << s) - 1);
    for (uint32_t rest = L.full & ~mask & above; rest; rest &= rest - 1) {
      int u = std::countr_zero(rest);
      if (L.adj[u] & ends) cyc[mask | (uint32_t{1} << u)] |= uint32_t{1} << u;
    }
  }
  return cyc;
}

bool closes_cycle(const Local& L, const std::vector<uint32_t>& cyc, uint32_t mask) {
  return std::popcount(mask) >= 3 && (cyc[mask] & L.adj[std::countr_zero(mask)]);
}

std::vector<int> backtrack(const Local& L, const std::vector<uint32_t>& table, uint32_t mask, int end) {
  std::vector<int> seq;
  while (true) {
    seq.push_back(L.label[end]);
    uint32_t prev = mask & ~(uint32_t{1} << end);
    if (!prev) break;
    int step = std::countr_zero(table[prev] & L.adj[end]);
    mask = prev;
    end = step;
  }
  return seq;
}

int dp_longest_path(const Local& L, PathSeq* witness) {
  if (L.k == 0) return 0;
  auto reach = path_table(L);
  int best = 0;
  uint32_t best_mask = 0;
  for (uint32_t mask = 1; mask <= L.full && mask != 0; ++mask) {
    if (reach[mask] && std::popcount(mask) > best) {
      best = std::popcount(mask);
      best_mask = mask;
    }
  }
  if (witness) witness->vertices = backtrack(L, reach, best_mask, std::countr_zero(reach[best_mask]));
  return best;
}

std::vector<VertexSet> dp_enumerate_paths(const Local& L, std::size_t cap) {
  if (L.k == 0) return {};
  auto reach = path_table(L);
  int best = 0;
  for (uint32_t mask = 1; mask <= L.full && mask != 0; ++mask)
    if (reach[mask]) best = std::max(best, std::popcount(mask));
  std::vector<VertexSet> out;
  for (uint32_t mask = 1; mask <= L.full && mask != 0; ++mask) {
    if (reach[mask] && std::popcount(mask) == best) {
      if (out.size() == cap) throw CapExceeded("longest-path enumeration exceeded result cap");
      out.push_back(L.to_set(mask));
    }
  }
  return out;
}

std::optional<int> dp_longest_cycle(const Local& L, int max_order, CycleSeq* witness) {
  if (L.k < 3) return std::nullopt;
  auto cyc = cycle_table(L, max_order);
  int best = 0;
  uint32_t best_mask = 0;
  for (uint32_t mask = 1; mask <= L.full && mask != 0; ++mask) {
    if (std::popcount(mask) > best && closes_cycle(L, cyc, mask)) {
      best = std::popcount(mask);
      best_mask = mask;
    }
  }
  if (best == 0) return std::nullopt;
  if (witness) {
    int s = std::countr_zero(best_mask);
    int end = std::countr_zero(cyc[best_mask] & L.adj[s]);
    witness->vertices = CycleSeq::canonical(backtrack(L, cyc, best_mask, end)).vertices;
  }
  return best;
}

std::vector<VertexSet> dp_enumerate_cycles(const Local& L, std::size_t cap) {
  if (L.k < 3) return {};
  auto cyc = cycle_table(L, kNoCap);
  int best = 0;
  for (uint32_t mask = 1; mask <= L.full && mask != 0; ++mask)
    if (closes_cycle(L, cyc, mask)) best = std::max(best, std::popcount(mask));
  std::vector<VertexSet> out;
  if (best == 0) return out;
  for (uint32_t mask = 1; mask <= L.full && mask != 0; ++mask) {
    if (std::popcount(mask) == best && closes_cycle(L, cyc, mask)) {
      if (out.size() == cap) throw CapExceeded("longest-cycle enumeration exceeded result cap");
      out.push_back(L.to_set(mask));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Depth-first search with block-tree bounds.

class SetCollector {
 public:
  explicit SetCollector(std::size_t cap, const char* what) : cap_(cap), what_(what) {}
  void reset() { sets_.clear(); }
  void add(const VertexSet& s) {
    if (sets_.insert(s).second && sets_.size() > cap_)
      throw CapExceeded(std::string(what_) + " enumeration exceeded result cap");
  }
  std::vector<VertexSet> sorted() const {
    std::vector<VertexSet> out(sets_.begin(), sets_.end());
    std::sort(out.begin(), out.end(), lex_less);
    return out;
  }

 private:
  std::unordered_set<VertexSet, VertexSetHash> sets_;
  std::size_t cap_;
  const char* what_;
};

class PathSearch {
 public:
  PathSearch(const Graph& g, const VertexSet& within, SetCollector* sets)
      : g_(g), within_(within & g.vertices()), sets_(sets) {}

  void run() {
    for (int s : within_) {
      path_.assign(1, s);
      used_ = VertexSet::singleton(s);
      record();
      descend(kMaxVertices);
    }
  }

  int best() const { return best_; }
  const std::vector<int>& best_path() const { return best_path_; }

 private:
  void record() {
    const int len = static_cast<int>(path_.size());
    if (len > best_) {
      best_ = len;
      best_path_ = path_;
      if (sets_) sets_->reset();
    }
    if (sets_ && len == best_) sets_->add(used_);
  }

  bool prunable(int bound) const { return sets_ ? bound < best_ : bound <= best_; }

  void descend(int inherited) {
    detail::poll_deadline();
    const int end = path_.back();
    const VertexSet avail = within_ - used_;
    const VertexSet next = g_.neighbors(end) & avail;
    if (next.empty()) return;
    int bound = inherited;
    if (next.size() >= 2 || inherited == kMaxVertices)
      bound = std::min(bound, static_cast<int>(path_.size()) - 1 + path_extent_bound(g_, end, avail));
    if (prunable(bound)) return;
    for (int u : next) {
      path_.push_back(u);
      used_.insert(u);
      record();
      descend(bound);
      used_.erase(u);
      path_.pop_back();
      if (prunable(bound)) return;
    }
  }

  const Graph& g_;
  VertexSet within_;
  SetCollector* sets_;
  std::vector<int> path_;
  VertexSet used_;
  int best_ = 0;
  std::vector<int> best_path_;
};

// Cycles are rooted at their minimum vertex and closed back to it.
class CycleSearch {
 public:
  CycleSearch(const Graph& g, const VertexSet& within, int max_order, SetCollector* sets)
      : g_(g), within_(within & g.vertices()), max_order_(max_order), sets_(sets) {}

  void run() {
    for (int s : within_) {
      root_ = s;
      above_ = within_ - VertexSet::range(s + 1);
      path_.assign(1, s);
      used_ = VertexSet::singleton(s);
      descend();
    }
  }

  int best() const { return best_; }
  const std::vector<int>& best_cycle() const { return best_cycle_; }

 private:
  bool prunable(int bound) const { return sets_ ? bound < best_ : bound <= best_; }

  void descend() {
    detail::poll_deadline();
    const int len = static_cast<int>(path_.size());
    const int end = path_.back();
    if (len >= 3 && g_.adjacent(end, root_) && path_[1] < end) {
      if (len > best_) {
        best_ = len;
        best_cycle_ = path_;
        if (sets_) sets_->reset();
      }
      if (sets_ && len == best_) sets_->add(used_);
    }
    if (len >= max_order_) return;
    const VertexSet avail = above_ - used_;
    const VertexSet next = g_.neighbors(end) & avail;
    if (next.empty()) return;
    if (len >= 2) {
      int chain = path_chain_bound(g_, end, root_, avail);
      if (chain == 0) return;
      if (prunable(std::min(max_order_, len + chain - 2))) return;
    } else if (prunable(std::min(max_order_, path_extent_bound(g_, end, avail)))) {
      return;
    }
    for (int u : next) {
      path_.push_back(u);
      used_.insert(u);
      descend();
      used_.erase(u);
      path_.pop_back();
    }
  }

  const Graph& g_;
  VertexSet within_;
  int max_order_;
  SetCollector* sets_;
  int root_ = 0;
  VertexSet above_;
  std::vector<int> path_;
  VertexSet used_;
  int best_ = 0;
  std::vector<int> best_cycle_;
};

// Single-source search in lexicographic neighbour order: the first optimum
// met is the lexicographically least one.
class FiberSearch {
 public:
  FiberSearch(const Graph& g, int x, int y) : g_(g), x_(x), y_(y) {}

  void run() {
    path_.assign(1, x_);
    used_ = VertexSet::singleton(x_);
    if (y_ < 0) record();
    descend();
  }

  const std::vector<int>& best_path() const { return best_path_; }

 private:
  void record() {
    if (static_cast<int>(path_.size()) > best_) {
      best_ = static_cast<int>(path_.size());
      best_path_ = path_;
    }
  }

  void descend() {
    detail::poll_deadline();
    const int end = path_.back();
    const VertexSet avail = g_.vertices() - used_;
    const VertexSet next = g_.neighbors(end) & avail;
    if (next.empty()) return;
    const int len = static_cast<int>(path_.size());
    if (y_ < 0) {
      if (len - 1 + path_extent_bound(g_, end, avail) <= best_) return;
    } else {
      int chain = path_chain_bound(g_, end, y_, avail);
      if (chain == 0 || len - 1 + chain <= best_) return;
    }
    for (int u : next) {
      path_.push_back(u);
      used_.insert(u);
      if (y_ < 0) {
        record();
        descend();
      } else if (u == y_) {
        record();
      } else {
        descend();
      }
      used_.erase(u);
      path_.pop_back();
    }
  }

  const Graph& g_;
  int x_;
  int y_;
  std::vector<int> path_;
  VertexSet used_;
  int best_ = 0;
  std::vector<int> best_path_;
};

// Below this size the DP beats DFS for single-optimum queries.
constexpr int kDPPreferredLimit = 18;

bool use_dp(SearchMethod method, int k, int preferred) {
  switch (method) {
    case SearchMethod::SubsetDP:
      return true;
    case SearchMethod::DepthFirst:
      return false;
    case SearchMethod::Auto:
      break;
  }
  return k <= preferred;
}

}  // namespace

// ---------------------------------------------------------------------------

int longest_path_length(const Graph& g, SearchMethod method) {
  return longest_path_length(g, g.vertices(), method);
}

int longest_path_length(const Graph& g, const VertexSet& within, SearchMethod method) {
  return longest_path(g, within, method).order();
}

PathSeq longest_path(const Graph& g, const VertexSet& within, SearchMethod method) {
  const VertexSet w = within & g.vertices();
  PathSeq out;
  if (w.empty()) return out;
  if (use_dp(method, w.size(), kDPPreferredLimit)) {
    dp_longest_path(Local(g, w), &out);
    return out;
  }
  PathSearch search(g, w, nullptr);
  search.run();
  out.vertices = search.best_path();
  return out;
}

std::vector<VertexSet> enumerate_longest_paths(const Graph& g, const EnumerationOptions& options) {
  return enumerate_longest_paths(g, g.vertices(), options);
}

std::vector<VertexSet> enumerate_longest_paths(const Graph& g, const VertexSet& within,
                                               const EnumerationOptions& options) {
  const VertexSet w = within & g.vertices();
  if (w.empty()) return {};
  if (use_dp(options.method, w.size(), kSubsetDPLimit)) return dp_enumerate_paths(Local(g, w), options.result_cap);
  SetCollector sets(options.result_cap, "longest-path");
  PathSearch search(g, w, &sets);
  search.run();
  return sets.sorted();
}

std::optional<int> longest_cycle_length(const Graph& g, SearchMethod method) {
  return longest_cycle_length(g, g.vertices(), kNoCap, method);
}

std::optional<int> longest_cycle_length(const Graph& g, const VertexSet& within, int max_order,
                                        SearchMethod method) {
  auto c = longest_cycle(g, within, max_order, method);
  if (!c) return std::nullopt;
  return c->order();
}

std::optional<CycleSeq> longest_cycle(const Graph& g, const VertexSet& within, int max_order,
                                      SearchMethod method) {
  const VertexSet w = within & g.vertices();
  if (max_order < 3 || w.size() < 3) return std::nullopt;
  if (use_dp(method, w.size(), kDPPreferredLimit)) {
    CycleSeq c;
    if (!dp_longest_cycle(Local(g, w), max_order, &c)) return std::nullopt;
    return c;
  }
  CycleSearch search(g, w, max_order, nullptr);
  search.run();
  if (search.best() == 0) return std::nullopt;
  return CycleSeq::canonical(search.best_cycle());
}

std::vector<VertexSet> enumerate_longest_cycles(const Graph& g, const EnumerationOptions& options) {
  return enumerate_longest_cycles(g, g.vertices(), options);
}

std::vector<VertexSet> enumerate_longest_cycles(const Graph& g, const VertexSet& within,
                                                const EnumerationOptions& options) {
  const VertexSet w = within & g.vertices();
  if (w.size() < 3) return {};
  if (use_dp(options.method, w.size(), kSubsetDPLimit)) return dp_enumerate_cycles(Local(g, w), options.result_cap);
  SetCollector sets(options.result_cap, "longest-cycle");
  CycleSearch search(g, w, kNoCap, &sets);
  search.run();
  return sets.sorted();
}

PathSeq x_fiber(const Graph& g, int x) {
  if (x < 0 || x >= g.order()) throw PreconditionError("x_fiber: vertex out of range");
  FiberSearch search(g, x, -1);
  search.run();
  return {search.best_path()};
}

std::optional<PathSeq> xy_fiber(const Graph& g, int x, int y) {
  if (x < 0 || x >= g.order() || y < 0 || y >= g.order()) throw PreconditionError("xy_fiber: vertex out of range");
  if (x == y) throw PreconditionError("xy_fiber: endpoints must differ");
  FiberSearch search(g, x, y);
  search.run();
  if (search.best_path().empty()) return std::nullopt;
  return PathSeq{search.best_path()};
}

}  // namespace gallai
