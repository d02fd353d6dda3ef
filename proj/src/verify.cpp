#include "gallai/verify.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <sstream>
#include <thread>

#include "gallai/blocks.hpp"
#include "gallai/constructions.hpp"
#include "gallai/errors.hpp"
#include "gallai/graph6.hpp"
#include "gallai/induced.hpp"
#include "gallai/invariants.hpp"
#include "gallai/paths.hpp"

namespace gallai {

using nlohmann::json;

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Skipped:
      return "skipped-by-filter";
    case Verdict::CapExceeded:
      return "cap-exceeded";
    case Verdict::Error:
      return "error";
  }
  return "error";
}

const std::vector<std::string>& check_tags() {
  static const std::vector<std::string> tags = {
      "gallai-exists", "gallai-max-degree", "thm9",   "prop10",      "thm13",     "thm20",         "thm22-claim",
      "chvatal-erdos", "cor14",             "lemma18", "lemma3",     "thm1-bound", "lct-thomassen",
  };
  return tags;
}

namespace {

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    int v = std::stoi(value, &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw PreconditionError("parameter " + key + " must be an integer, got '" + value + "'");
}

}  // namespace

CheckSpec make_check(const std::string& tag, const std::map<std::string, std::string>& params) {
  if (std::find(check_tags().begin(), check_tags().end(), tag) == check_tags().end())
    throw PreconditionError("unknown check '" + tag + "'");
  CheckSpec spec;
  spec.tag = tag;
  spec.raw = params;
  for (const auto& [key, value] : params) {
    if (key == "k") {
      spec.k = parse_int(key, value);
    } else if (key == "m") {
      spec.m = parse_int(key, value);
    } else if (key == "n0") {
      spec.n0 = parse_int(key, value);
    } else if (key == "pattern") {
      if (value == "path")
        spec.objective = Objective::LongestPath;
      else if (value == "cycle")
        spec.objective = Objective::LongestCycle;
      else
        throw PreconditionError("pattern must be path or cycle");
    } else {
      throw PreconditionError("unknown parameter '" + key + "'");
    }
  }
  if (tag == "thm13" && spec.k != 1 && spec.k != 2) throw PreconditionError("thm13 needs k = 1 or 2");
  if (tag == "thm22-claim" && spec.k < 1) throw PreconditionError("thm22-claim needs k >= 1");
  if (tag == "lemma3" && spec.m != 1 && spec.m != 2) throw PreconditionError("lemma3 needs m = 1 or 2");
  return spec;
}

// ---------------------------------------------------------------------------
// Single-graph checks.

namespace {

struct LongestPaths {
  int order = 0;
  std::vector<VertexSet> sets;
  VertexSet gallai;
};

LongestPaths longest_paths(const Graph& g) {
  LongestPaths out;
  out.sets = enumerate_longest_paths(g);
  out.gallai = g.vertices();
  for (const auto& s : out.sets) out.gallai &= s;
  out.order = out.sets.empty() ? 0 : out.sets.front().size();
  return out;
}

json avoiding_path(const Graph& g, int v, int order) {
  PathSeq p = longest_path(g, g.vertices() - VertexSet{v});
  if (p.order() != order) return nullptr;
  return p.vertices;
}

CheckOutcome skip(const std::string& why) { return {Verdict::Skipped, why, json::object(), nullptr}; }

// Pass iff every target vertex lies on every longest path.
CheckOutcome targets_are_gallai(const Graph& g, const VertexSet& targets) {
  const LongestPaths lp = longest_paths(g);
  CheckOutcome out;
  out.metrics = {{"longest_path", lp.order}, {"gallai_count", lp.gallai.size()}, {"targets", targets.size()}};
  const VertexSet missing = targets - lp.gallai;
  if (missing.empty()) return out;
  const int v = missing.first();
  out.verdict = Verdict::Fail;
  out.reason = "vertex " + std::to_string(v) + " of degree " + std::to_string(g.degree(v)) + " is not Gallai";
  out.diagnostic = {{"vertex", v},
                    {"degree", g.degree(v)},
                    {"max_degree", g.max_degree()},
                    {"avoiding_path", avoiding_path(g, v, lp.order)}};
  return out;
}

VertexSet degree_at_least(const Graph& g, int d) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) >= d) out.insert(v);
  return out;
}

CheckOutcome gallai_exists(const Graph& g) {
  const LongestPaths lp = longest_paths(g);
  CheckOutcome out;
  out.metrics = {{"longest_path", lp.order}, {"gallai_count", lp.gallai.size()}};
  if (!lp.gallai.empty()) return out;
  out.verdict = Verdict::Fail;
  out.reason = "no Gallai vertex";
  json avoid = json::object();
  for (int v = 0; v < g.order(); ++v) avoid[std::to_string(v)] = avoiding_path(g, v, lp.order);
  out.diagnostic = {{"longest_path", lp.order}, {"avoiding_paths", avoid}};
  return out;
}

const Graph& p3_p1() {
  static const Graph g = linear_forest({3, 1});
  return g;
}

const Graph& p2_2p1() {
  static const Graph g = linear_forest({2, 1, 1});
  return g;
}

bool spanning_path(const Graph& g) { return longest_path_length(g) == g.order(); }
bool spanning_cycle(const Graph& g) { return g.order() >= 3 && longest_cycle_length(g).value_or(0) == g.order(); }

CheckOutcome chvatal_erdos(const Graph& g) {
  const int a = alpha(g);
  const int k = kappa(g);
  const bool cycle_clause = g.order() >= 3 && a <= k;
  const bool path_clause = a <= k + 1;
  if (!cycle_clause && !path_clause) return skip("alpha > kappa + 1");
  CheckOutcome out;
  out.metrics = {{"alpha", a}, {"kappa", k}};
  if (cycle_clause && !spanning_cycle(g)) {
    out.verdict = Verdict::Fail;
    out.reason = "alpha <= kappa but no spanning cycle";
    out.diagnostic = {{"longest_cycle", longest_cycle_length(g).value_or(0)}};
  } else if (path_clause && !spanning_path(g)) {
    out.verdict = Verdict::Fail;
    out.reason = "alpha <= kappa + 1 but no spanning path";
    out.diagnostic = {{"longest_path", longest_path(g, g.vertices()).vertices}};
  }
  return out;
}

CheckOutcome near_regular_traceable(const Graph& g) {
  if (g.order() == 0) return skip("empty graph");
  const int a = alpha(g);
  const bool first = is_connected(g) && a <= 3 && g.max_degree() - g.min_degree() <= 1;
  const bool second = !first && a <= 4 && is_regular(g) && kappa(g) >= 2;
  if (!first && !second) return skip("neither clause applies");
  CheckOutcome out;
  out.metrics = {{"alpha", a}, {"clause", first ? "near-regular" : "regular-2-connected"}};
  if (!spanning_path(g)) {
    out.verdict = Verdict::Fail;
    out.reason = "no spanning path";
    out.diagnostic = {{"longest_path", longest_path(g, g.vertices()).vertices}};
  }
  return out;
}

CheckOutcome special_block(const Graph& g) {
  const LongestPaths lp = longest_paths(g);
  const auto dec = blocks(g);
  if (dec.cut_vertices.intersects(lp.gallai)) return skip("a cut vertex is Gallai");
  CheckOutcome out;
  out.metrics = {{"blocks", dec.blocks.size()}, {"cut_vertices", dec.cut_vertices.size()}};
  auto b = find_special_block(g);
  if (b) {
    out.metrics["special_block"] = b->to_vector();
    return out;
  }
  out.verdict = Verdict::Fail;
  out.reason = "no special block";
  return out;
}

CheckOutcome subdivisions_intersect(const Graph& g, int m) {
  const int k = kappa(g);
  if (k <= m * m) return skip("kappa <= m^2");
  CheckOutcome out;
  out.metrics = {{"kappa", k}};
  int idx = 0;
  for (const auto& r : patterns_with_edges(m)) {
    if (!pairwise_intersecting(g, r)) {
      out.verdict = Verdict::Fail;
      out.reason = "maximum subdivisions of pattern " + std::to_string(idx) + " are not pairwise intersecting";
      json edges = json::array();
      for (auto [a, b] : r.edges) edges.push_back({a, b});
      out.diagnostic = {{"pattern_order", r.order}, {"pattern_edges", edges}};
      return out;
    }
    ++idx;
  }
  return out;
}

CheckOutcome sublinear_bound_check(const Graph& g, Objective objective) {
  if (objective == Objective::LongestPath ? !is_connected(g) || g.order() == 0 : kappa(g) < 2)
    return skip(objective == Objective::LongestPath ? "not connected" : "not 2-connected");
  const SublinearResult r = sublinear_transversal(g, objective);
  const bool valid = validate_transversal(g, objective, r.transversal);
  const long long limit = std::min<long long>(g.order(), r.bound);
  CheckOutcome out;
  std::string steps;
  for (const auto& e : r.trace) steps += std::string(1, e.step) + ":" + e.action + " ";
  if (!steps.empty()) steps.pop_back();
  out.metrics = {{"size", r.transversal.size()}, {"bound", r.bound}, {"valid", valid}, {"trace", steps}};
  if (g.order() <= kSubsetDPLimit) {
    const HittingSet exact = objective == Objective::LongestPath ? lpt_exact(g) : lct_exact(g);
    out.metrics[objective == Objective::LongestPath ? "lpt" : "lct"] = exact.size;
    if (exact.size > 0) out.metrics["ratio"] = static_cast<double>(r.transversal.size()) / exact.size;
  }
  if (!valid || r.transversal.size() > limit || r.diagnostic) {
    out.verdict = Verdict::Fail;
    out.reason = !valid ? "output misses an optimum" : r.diagnostic ? *r.diagnostic : "output exceeds bound";
    out.diagnostic = {{"transversal", r.transversal.to_vector()}};
  }
  return out;
}

CheckOutcome cycle_transversal_bound(const Graph& g) {
  if (!longest_cycle_length(g)) return skip("acyclic");
  const HittingSet h = lct_exact(g);
  const int limit = (g.order() + 2) / 3;
  CheckOutcome out;
  out.metrics = {{"lct", h.size}, {"limit", limit}};
  if (h.size > limit) {
    out.verdict = Verdict::Fail;
    out.reason = "lct exceeds ceil(n/3)";
    out.diagnostic = {{"witness", h.witness.to_vector()}};
  }
  return out;
}

}  // namespace

CheckOutcome run_check(const Graph& g, const CheckSpec& spec) {
  const std::string& tag = spec.tag;
  const int n = g.order();
  if (tag == "gallai-exists") {
    if (n == 0 || !is_connected(g)) return skip("not connected");
    return gallai_exists(g);
  }
  if (tag == "gallai-max-degree") {
    if (n == 0 || !is_connected(g)) return skip("not connected");
    return targets_are_gallai(g, degree_at_least(g, g.max_degree()));
  }
  if (tag == "thm9") {
    if (n == 0 || !is_connected(g)) return skip("not connected");
    if (induced_contains(g, p3_p1())) return skip("contains P3+P1");
    return targets_are_gallai(g, degree_at_least(g, g.max_degree() - 1));
  }
  if (tag == "prop10") {
    if (n == 0 || !is_connected(g)) return skip("not connected");
    if (induced_contains(g, p2_2p1())) return skip("contains P2+2P1");
    return targets_are_gallai(g, degree_at_least(g, g.max_degree()));
  }
  if (tag == "thm13") {
    if (n == 0 || kappa(g) < spec.k) return skip("connectivity below k");
    if (alpha(g) > spec.k + 2) return skip("alpha > k + 2");
    return targets_are_gallai(g, degree_at_least(g, g.max_degree() - (2 - spec.k)));
  }
  if (tag == "thm20") {
    if (n == 0 || !is_connected(g)) return skip("not connected");
    if (alpha(g) > 4) return skip("alpha > 4");
    return gallai_exists(g);
  }
  if (tag == "thm22-claim") {
    const long long k = spec.k;
    const long long n0 = spec.n0.value_or(k * (k + 2) * (2 * k + 3) + 1);
    if (n < n0) return skip("n < n0");
    if (kappa(g) < spec.k) return skip("connectivity below k");
    if (alpha(g) > spec.k + 2) return skip("alpha > k + 2");
    return targets_are_gallai(g, degree_at_least(g, g.max_degree()));
  }
  if (tag == "chvatal-erdos") return chvatal_erdos(g);
  if (tag == "cor14") return near_regular_traceable(g);
  if (tag == "lemma18") {
    if (n == 0 || !is_connected(g)) return skip("not connected");
    return special_block(g);
  }
  if (tag == "lemma3") return subdivisions_intersect(g, spec.m);
  if (tag == "thm1-bound") return sublinear_bound_check(g, spec.objective);
  if (tag == "lct-thomassen") return cycle_transversal_bound(g);
  throw PreconditionError("unknown check '" + tag + "'");
}

// ---------------------------------------------------------------------------
// Filters.

Filter Filter::parse(const std::string& text) {
  Filter f;
  f.text = text;
  auto number = [&](std::size_t from) { return parse_int(text, text.substr(from)); };
  if (text == "connected") {
    f.kind = Kind::Connected;
  } else if (text.rfind("kappa>=", 0) == 0) {
    f.kind = Kind::KappaAtLeast;
    f.value = number(7);
  } else if (text.rfind("alpha<=", 0) == 0) {
    f.kind = Kind::AlphaAtMost;
    f.value = number(7);
  } else if (text.rfind("n<=", 0) == 0) {
    f.kind = Kind::OrderAtMost;
    f.value = number(3);
  } else if (text.rfind("free=", 0) == 0) {
    f.kind = Kind::Free;
    f.forbidden = parse_graph6(text.substr(5));
  } else {
    throw PreconditionError("unknown filter '" + text + "'");
  }
  return f;
}

bool Filter::accepts(const Graph& g) const {
  switch (kind) {
    case Kind::Connected:
      return g.order() > 0 && is_connected(g);
    case Kind::KappaAtLeast:
      return kappa(g) >= value;
    case Kind::AlphaAtMost:
      return alpha(g) <= value;
    case Kind::Free:
      return !induced_contains(g, forbidden);
    case Kind::OrderAtMost:
      return g.order() <= value;
  }
  return false;
}

std::vector<Filter> parse_filters(const std::string& list) {
  std::vector<Filter> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(Filter::parse(item));
  return out;
}

// ---------------------------------------------------------------------------
// Campaigns.

std::vector<std::string> read_corpus(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

namespace {

RecordResult evaluate(std::size_t index, const std::string& line, const CheckSpec& spec,
                      const std::vector<Filter>& filters, const CampaignOptions& options) {
  RecordResult r;
  r.index = index;
  r.graph6 = line;
  try {
    const Graph g = parse_graph6(line);
    r.n = g.order();
    std::optional<ScopedDeadline> deadline;
    if (options.budget) deadline.emplace(*options.budget);
    for (const auto& f : filters) {
      if (!f.accepts(g)) {
        r.verdict = Verdict::Skipped;
        r.reason = "filter " + f.text;
        return r;
      }
    }
    CheckOutcome o = run_check(g, spec);
    r.verdict = o.verdict;
    r.reason = std::move(o.reason);
    r.metrics = std::move(o.metrics);
    r.diagnostic = std::move(o.diagnostic);
  } catch (const CapExceeded& e) {
    r.verdict = Verdict::CapExceeded;
    r.reason = e.what();
  } catch (const std::exception& e) {
    r.verdict = Verdict::Error;
    r.reason = e.what();
  }
  return r;
}

}  // namespace

CampaignReport run_campaign(const std::vector<std::string>& lines, const std::string& corpus_name,
                            const CheckSpec& spec, const std::vector<Filter>& filters,
                            const CampaignOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CampaignReport report;
  report.corpus = corpus_name;
  report.spec = spec;
  for (const auto& f : filters) report.filters.push_back(f.text);
  report.records.resize(lines.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++)
      report.records[i] = evaluate(i, lines[i], spec, filters, options);
  };
  const int jobs = std::max(1, options.jobs);
  {
    std::vector<std::jthread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }

  for (Verdict v : {Verdict::Pass, Verdict::Fail, Verdict::Skipped, Verdict::CapExceeded, Verdict::Error})
    report.totals[verdict_name(v)] = 0;
  for (const auto& r : report.records) ++report.totals[verdict_name(r.verdict)];
  report.totals["total"] = report.records.size();
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::size_t CampaignReport::count(Verdict v) const {
  auto it = totals.find(verdict_name(v));
  return it == totals.end() ? 0 : it->second;
}

std::vector<const RecordResult*> CampaignReport::failures() const {
  std::vector<const RecordResult*> out;
  for (const auto& r : records)
    if (r.verdict == Verdict::Fail) out.push_back(&r);
  return out;
}

namespace {

json record_json(const RecordResult& r) {
  json j = {{"index", r.index}, {"n", r.n}, {"graph6", r.graph6}, {"verdict", verdict_name(r.verdict)}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (!r.metrics.empty()) j["metrics"] = r.metrics;
  if (!r.diagnostic.is_null()) j["diagnostic"] = r.diagnostic;
  return j;
}

}  // namespace

json CampaignReport::to_json(bool with_records) const {
  json check = {{"tag", spec.tag}, {"params", spec.raw}};
  json out = {{"corpus", corpus},       {"check", check},       {"filters", filters},
              {"totals", totals},       {"wall_clock_ms", wall_ms}};
  json fails = json::array();
  for (const auto* r : failures()) fails.push_back(record_json(*r));
  out["counterexamples"] = fails;
  if (with_records) {
    json all = json::array();
    for (const auto& r : records) all.push_back(record_json(r));
    out["records"] = all;
  }
  return out;
}

std::string CampaignReport::to_csv() const {
  std::ostringstream out;
  out << "index,n,verdict,lpt,lct,longest_path\n";
  auto field = [](const json& metrics, const char* key) -> std::string {
    if (!metrics.is_object() || !metrics.contains(key)) return "";
    return metrics[key].dump();
  };
  for (const auto& r : records)
    out << r.index << ',' << r.n << ',' << verdict_name(r.verdict) << ',' << field(r.metrics, "lpt") << ','
        << field(r.metrics, "lct") << ',' << field(r.metrics, "longest_path") << '\n';
  return out.str();
}

CampaignReport free_family_scan(const std::vector<std::string>& lines, const std::string& corpus_name,
                                const Graph& h, const CampaignOptions& options) {
  if (!is_linear_forest(h)) throw PreconditionError("forbidden graph must be a linear forest");
  std::vector<Filter> filters{Filter::parse("connected"), Filter::parse("free=" + to_graph6(h))};
  return run_campaign(lines, corpus_name, make_check("gallai-exists"), filters, options);
}

LinearForestSurvey induced_linear_forests(const Graph& g) {
  if (g.order() > 24) throw CapExceeded("induced_linear_forests limited to 24 vertices");
  LinearForestSurvey out;
  const uint32_t full = (uint32_t{1} << g.order()) - 1;
  for (uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    VertexSet keep;
    for (uint32_t m = mask; m; m &= m - 1) keep.insert(std::countr_zero(m));
    const Graph h = g.induced(keep);
    if (!is_linear_forest(h)) continue;
    out.classes[h.order()].insert(linear_forest_type(h));
    out.max_order = std::max(out.max_order, h.order());
  }
  return out;
}

}  // namespace gallai
