#include "gallai/transversal.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "gallai/blocks.hpp"
#include "gallai/errors.hpp"
#include "gallai/flow.hpp"
#include "gallai/invariants.hpp"

namespace gallai {

namespace mp = boost::multiprecision;
using Rational = mp::cpp_rational;
using BigInt = mp::cpp_int;

// ---------------------------------------------------------------------------
// Minimum hitting set.

namespace {

bool can_hit(const std::vector<VertexSet>& edges, const VertexSet& chosen, VertexSet allowed, int budget) {
  detail::poll_deadline();
  int pick = -1;
  int pick_size = INT_MAX;
  int packing = 0;
  VertexSet packed;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].intersects(chosen)) continue;
    const VertexSet options = edges[i] & allowed;
    if (options.empty()) return false;
    if (options.size() < pick_size) {
      pick_size = options.size();
      pick = static_cast<int>(i);
    }
    if (!options.intersects(packed)) {
      ++packing;
      packed |= options;
    }
  }
  if (pick < 0) return true;
  if (packing > budget) return false;
  // Try the options of the smallest open edge, most frequent first.
  std::vector<std::pair<int, int>> order;
  for (int v : edges[static_cast<std::size_t>(pick)] & allowed) {
    int hits = 0;
    for (const auto& e : edges)
      if (!e.intersects(chosen) && e.contains(v)) ++hits;
    order.emplace_back(-hits, v);
  }
  std::sort(order.begin(), order.end());
  for (auto [neg, v] : order) {
    VertexSet next = chosen;
    next.insert(v);
    if (can_hit(edges, next, allowed, budget - 1)) return true;
    allowed.erase(v);
  }
  return false;
}

}  // namespace

HittingSet minimum_hitting_set(std::span<const VertexSet> edges_in) {
  std::unordered_set<VertexSet, VertexSetHash> unique(edges_in.begin(), edges_in.end());
  std::vector<VertexSet> edges(unique.begin(), unique.end());
  std::sort(edges.begin(), edges.end(), lex_less);
  VertexSet universe;
  for (const auto& e : edges) {
    if (e.empty()) throw PreconditionError("hypergraph edge is empty");
    universe |= e;
  }
  HittingSet out;
  while (!can_hit(edges, {}, universe, out.size)) ++out.size;
  for (int i = 0; i < out.size; ++i) {
    const int last = out.witness.empty() ? -1 : *std::prev(out.witness.to_vector().end());
    for (int v = universe.next(last); v != -1; v = universe.next(v)) {
      VertexSet chosen = out.witness;
      chosen.insert(v);
      if (can_hit(edges, chosen, universe - VertexSet::range(v + 1), out.size - i - 1)) {
        out.witness = chosen;
        break;
      }
    }
  }
  return out;
}

VertexSet gallai_vertices(const Graph& g, const EnumerationOptions& options) {
  if (!is_connected(g)) throw PreconditionError("gallai_vertices requires a connected graph");
  VertexSet common = g.vertices();
  for (const auto& s : enumerate_longest_paths(g, options)) common &= s;
  return common;
}

HittingSet lpt_exact(const Graph& g, const EnumerationOptions& options) {
  auto sets = enumerate_longest_paths(g, options);
  return minimum_hitting_set(sets);
}

HittingSet lct_exact(const Graph& g, const EnumerationOptions& options) {
  auto sets = enumerate_longest_cycles(g, options);
  if (sets.empty()) throw PreconditionError("lct_exact requires a graph with a cycle");
  return minimum_hitting_set(sets);
}

// ---------------------------------------------------------------------------
// Separators and connectors.

namespace {

struct SplitNetwork {
  FlowNetwork net;
  int source;
  int sink;

  // Vertex v becomes in-node 2v and out-node 2v+1 joined by a unit arc.
  SplitNetwork(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& within)
      : net(2 * g.order() + 2), source(2 * g.order()), sink(2 * g.order() + 1) {
    for (int v : within) {
      net.add_arc(2 * v, 2 * v + 1, 1);
      for (int w : g.neighbors(v) & within) net.add_arc(2 * v + 1, 2 * w, FlowNetwork::kInfinite);
    }
    for (int v : x & within) net.add_arc(source, 2 * v, FlowNetwork::kInfinite);
    for (int v : y & within) net.add_arc(2 * v + 1, sink, FlowNetwork::kInfinite);
  }

  int flow() { return net.max_flow(source, sink); }
};

int separation(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& within) {
  SplitNetwork s(g, x, y, within);
  return s.flow();
}

}  // namespace

SeparatorConnector menger(const Graph& g, const VertexSet& x, const VertexSet& y) {
  return menger(g, x, y, g.vertices());
}

SeparatorConnector menger(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& within_in) {
  const VertexSet within = within_in & g.vertices();
  if ((x & within).empty() || (y & within).empty()) throw PreconditionError("menger: X and Y must be non-empty");
  SplitNetwork split(g, x, y, within);
  SeparatorConnector out;
  out.size = split.flow();

  // Connector: walk the unit flow out of the source.
  const FlowNetwork& net = split.net;
  int arcs = 0;
  for (int node = 0; node < net.node_count(); ++node)
    for (int a : net.arcs_from(node)) arcs = std::max(arcs, a + 1);
  std::vector<int> spare(static_cast<std::size_t>(arcs), 0);
  auto remaining = [&](int arc) { return net.flow_on(arc) - spare[static_cast<std::size_t>(arc)]; };
  for (int k = 0; k < out.size; ++k) {
    std::vector<int> walk;
    int node = split.source;
    while (node != split.sink) {
      int arc = -1;
      for (int a : net.arcs_from(node))
        if (net.is_forward(a) && remaining(a) > 0) {
          arc = a;
          break;
        }
      ++spare[static_cast<std::size_t>(arc)];
      node = net.head(arc);
      if (node < split.source && node % 2 == 0) walk.push_back(node / 2);
    }
    int end = 0;
    while (!y.contains(walk[static_cast<std::size_t>(end)])) ++end;
    int begin = end;
    while (!x.contains(walk[static_cast<std::size_t>(begin)])) --begin;
    out.connector.push_back(PathSeq{{walk.begin() + begin, walk.begin() + end + 1}});
  }
  std::sort(out.connector.begin(), out.connector.end(),
            [](const PathSeq& a, const PathSeq& b) { return a.vertices < b.vertices; });

  // Lexicographically least minimum separator by greedy forcing.
  VertexSet rest = within;
  for (int v : within) {
    if (out.separator.size() == out.size) break;
    VertexSet trial = rest;
    trial.erase(v);
    const int left = out.size - out.separator.size() - 1;
    if (separation(g, x, y, trial) == left) {
      out.separator.insert(v);
      rest = trial;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::optional<VertexSet> find_special_block(const Graph& g, const EnumerationOptions& options) {
  if (!is_connected(g)) throw PreconditionError("find_special_block requires a connected graph");
  if (g.order() == 0) return std::nullopt;
  const auto paths = enumerate_longest_paths(g, options);
  for (const auto& b : blocks(g).blocks) {
    const int need = std::min(2, b.size());
    bool special = std::all_of(paths.begin(), paths.end(), [&](const VertexSet& p) { return (p & b).size() >= need; });
    if (special) return b;
  }
  return std::nullopt;
}

bool pairwise_intersecting(const Graph& g, const MultigraphPattern& r, std::size_t result_cap) {
  // Two sets each holding more than half of the vertices always meet.
  auto best = max_R_subdivision(g, r);
  if (!best || 2 * best->size() > g.order()) return true;
  auto sets = enumerate_max_R_subdivisions(g, r, result_cap);
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (!sets[i].intersects(sets[j])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Sublinear transversal.

int objective_edges(Objective objective) { return objective == Objective::LongestPath ? 1 : 2; }

const char* objective_name(Objective objective) {
  return objective == Objective::LongestPath ? "path" : "cycle";
}

int optimum_within(const Graph& g, Objective objective, const VertexSet& within) {
  if (objective == Objective::LongestPath) return longest_path_length(g, within);
  return longest_cycle_length(g, within).value_or(0);
}

bool validate_transversal(const Graph& g, Objective objective, const VertexSet& t) {
  const int opt = optimum_within(g, objective, g.vertices());
  if (opt == 0) return true;
  return optimum_within(g, objective, g.vertices() - t) < opt;
}

long long sublinear_bound(int n, int m) {
  const BigInt target = BigInt(4096) * mp::pow(BigInt(m), 5) * mp::pow(BigInt(n), 3);
  auto b = static_cast<long long>(std::floor(8.0 * std::pow(m, 1.25) * std::pow(n, 0.75))) - 2;
  b = std::max(0LL, b);
  while (mp::pow(BigInt(b), 4) < target) ++b;
  return b;
}

namespace {

Rational exact(double d) {
  if (!(d > 0) || !std::isfinite(d)) throw PreconditionError("epsilon must be a positive finite number");
  int e = 0;
  double f = std::frexp(d, &e);
  auto mant = static_cast<long long>(std::ldexp(f, 53));
  e -= 53;
  Rational r{BigInt(mant)};
  if (e >= 0) return r * Rational(mp::pow(BigInt(2), e));
  return r / Rational(mp::pow(BigInt(2), -e));
}

std::optional<VertexSet> optimum_inside(const Graph& g, Objective objective, const VertexSet& within, int opt) {
  if (objective == Objective::LongestPath) {
    auto p = longest_path(g, within);
    if (p.order() == opt) return p.vertex_set();
    return std::nullopt;
  }
  auto c = longest_cycle(g, within);
  if (c && c->order() == opt) return c->vertex_set();
  return std::nullopt;
}

void require_intersecting(const Graph& g, Objective objective) {
  if (objective == Objective::LongestPath && is_connected(g)) return;
  if (objective == Objective::LongestCycle && kappa(g) >= 2) return;
  auto sets = objective == Objective::LongestPath ? enumerate_longest_paths(g) : enumerate_longest_cycles(g);
  if (objective == Objective::LongestCycle && sets.empty())
    throw PreconditionError("graph has no cycle");
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (!sets[i].intersects(sets[j])) throw PreconditionError("optima do not pairwise intersect");
}

}  // namespace

SublinearResult sublinear_transversal(const Graph& g, Objective objective, const SublinearOptions& options) {
  SublinearResult out;
  const int n = g.order();
  const int m = objective_edges(objective);
  if (n == 0) return out;
  require_intersecting(g, objective);
  out.optimum = optimum_within(g, objective, g.vertices());
  out.bound = sublinear_bound(n, m);

  VertexSet h = g.vertices();
  VertexSet y;
  auto log = [&](char step, const char* action, int value) {
    out.trace.push_back({step, action, h.size(), y.size(), value});
  };
  auto finish = [&](char step, const char* action, const VertexSet& extra) {
    out.transversal = y | extra;
    log(step, action, extra.size());
    return out;
  };

  if (m > n) return finish('a', "whole-graph", g.vertices());
  const Rational eps = options.epsilon ? exact(*options.epsilon) : Rational(0);
  const Rational eps4 = options.epsilon ? eps * eps * eps * eps : Rational(16 * m, n);
  out.epsilon4 = eps4.str();
  const BigInt n4 = mp::pow(BigInt(n), 4);
  const Rational n2(n * n);

  // ceil(eps n): least c with c^4 >= eps^4 n^4.
  int c = 0;
  while (Rational(mp::pow(BigInt(c), 4)) < eps4 * Rational(n4)) ++c;

  // Largest L <= 2 eps n + 4/eps^2, compared exactly. With A = 2 eps n and
  // B = 4/eps^2: L <= A + B iff L <= B or (L - B)^4 <= A^4, and
  // (L - B)^4 = P - B Q with P = L^4 + 6L^2B^2 + B^4, Q = 4L^3 + 4LB^2.
  const Rational a4 = Rational(16) * eps4 * Rational(n4);
  const Rational b2 = Rational(16) / eps4;
  auto within_cap = [&](int len) {
    const Rational l(len);
    const Rational l2 = l * l;
    if (l2 <= b2) return true;
    const Rational p = l2 * l2 + 6 * l2 * b2 + b2 * b2;
    const Rational q = 4 * l2 * l + 4 * l * b2;
    const Rational lhs = p - a4;
    if (lhs <= 0) return true;
    return lhs * lhs <= b2 * q * q;
  };

  auto locate = [&](const VertexSet& cut) -> std::optional<VertexSet> {
    for (const auto& comp : components(g, h - cut))
      if (optimum_within(g, objective, comp) == out.optimum) return comp;
    return std::nullopt;
  };

  while (true) {
    // (b) two disjoint paths of ceil(eps n) vertices, or a short optimum.
    const PathSeq p = longest_path(g, h);
    if (p.order() < 2 * c) {
      auto f = optimum_inside(g, objective, h, out.optimum);
      if (!f) return finish('b', "no-surviving-optimum", {});
      return finish('b', "short-paths", *f);
    }
    const VertexSet p1(std::span<const int>(p.vertices.data(), static_cast<std::size_t>(c)));
    const VertexSet p2(std::span<const int>(p.vertices.data() + p.order() - c, static_cast<std::size_t>(c)));
    log('b', "split", p.order());

    // (c) small separator between the halves.
    const auto sep = menger(g, p1, p2, h);
    if (Rational(sep.size * sep.size) <= eps4 * n2) {
      auto next = locate(sep.separator);
      if (!next) return finish('c', "separator-hits-all", sep.separator);
      y |= sep.separator;
      h = *next;
      log('c', "shrink", sep.size);
      continue;
    }
    log('c', "large-connector", sep.size);

    // (d) longest cycle under the size cap.
    int cap = h.size();
    while (cap >= 3 && !within_cap(cap)) --cap;
    const auto cyc = longest_cycle(g, h, cap);
    if (!cyc) {
      out.diagnostic = "no cycle within the size cap despite a large connector";
      if (options.strict) throw UnreachableBranch(*out.diagnostic);
      return finish('d', "diagnostic-fallback", *optimum_inside(g, objective, h, out.optimum));
    }
    const VertexSet cv = cyc->vertex_set();
    const int ell = cyc->order();
    auto f = optimum_inside(g, objective, h - cv, out.optimum);
    if (!f) return finish('d', "cycle-hits-all", cv);
    if (f->size() < ell) return finish('d', "short-optimum", *f);
    log('d', "disjoint-optimum", ell);

    // (e) small separator between the cycle and the optimum.
    const auto t = menger(g, cv, *f, h);
    if (Rational(mp::pow(BigInt(t.size), 4)) <= eps4 * Rational(mp::pow(BigInt(ell), 4))) {
      auto next = locate(t.separator);
      if (!next) return finish('e', "separator-hits-all", t.separator);
      y |= t.separator;
      h = *next;
      log('e', "shrink", t.size);
      continue;
    }
    out.diagnostic = "connector between cycle and disjoint optimum exceeds eps * l";
    if (options.strict) throw UnreachableBranch(*out.diagnostic);
    return finish('e', "diagnostic-fallback", *f);
  }
}

}  // namespace gallai
