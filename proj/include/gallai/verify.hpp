#pragma once

#include <chrono>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "gallai/graph.hpp"
#include "gallai/transversal.hpp"

namespace gallai {

enum class Verdict { Pass, Fail, Skipped, CapExceeded, Error };
const char* verdict_name(Verdict v);

/// Check tags accepted by make_check.
const std::vector<std::string>& check_tags();

/// A parsed check. Parameters not used by a tag are ignored.
struct CheckSpec {
  std::string tag;
  int k = 1;                                   ///< connectivity level
  int m = 1;                                   ///< pattern edge count
  Objective objective = Objective::LongestPath;
  std::optional<long long> n0;                 ///< order threshold override
  std::map<std::string, std::string> raw;      ///< parameters as given
};

/// Builds a check from its tag and "key=value" parameters; throws
/// PreconditionError on unknown tags or malformed parameters.
CheckSpec make_check(const std::string& tag, const std::map<std::string, std::string>& params = {});

struct CheckOutcome {
  Verdict verdict = Verdict::Pass;
  std::string reason;            ///< why a graph was skipped or failed
  nlohmann::json metrics = nlohmann::json::object();
  nlohmann::json diagnostic;     ///< violated path, missing vertex, ...
};

/// Evaluates one check on one graph. Hypothesis failures yield Skipped;
/// search caps (including the thread's deadline) yield CapExceeded.
CheckOutcome run_check(const Graph& g, const CheckSpec& spec);

/// Corpus filter: connected | kappa>=k | alpha<=c | free=<graph6> | n<=N.
struct Filter {
  enum class Kind { Connected, KappaAtLeast, AlphaAtMost, Free, OrderAtMost } kind = Kind::Connected;
  int value = 0;
  Graph forbidden;
  std::string text;

  static Filter parse(const std::string& text);
  bool accepts(const Graph& g) const;
};

/// Parses a comma-separated filter list.
std::vector<Filter> parse_filters(const std::string& list);

struct CampaignOptions {
  int jobs = 1;
  std::optional<std::chrono::milliseconds> budget;  ///< per graph
};

struct RecordResult {
  std::size_t index = 0;
  int n = -1;
  std::string graph6;
  Verdict verdict = Verdict::Pass;
  std::string reason;
  nlohmann::json metrics = nlohmann::json::object();
  nlohmann::json diagnostic;
};

struct CampaignReport {
  std::string corpus;
  CheckSpec spec;
  std::vector<std::string> filters;
  std::vector<RecordResult> records;  ///< one per input record, by index
  std::map<std::string, std::size_t> totals;
  double wall_ms = 0;

  std::size_t count(Verdict v) const;
  std::vector<const RecordResult*> failures() const;
  /// Full report; `with_records` false keeps only totals and failures.
  nlohmann::json to_json(bool with_records = true) const;
  std::string to_csv() const;
};

/// Evaluates every record. Records are blank-line free graph6 lines; an
/// optional header is accepted. Parse errors become Error verdicts.
CampaignReport run_campaign(const std::vector<std::string>& lines, const std::string& corpus_name,
                            const CheckSpec& spec, const std::vector<Filter>& filters,
                            const CampaignOptions& options = {});
std::vector<std::string> read_corpus(std::istream& in);

/// Scan for connected h-free graphs without a Gallai vertex; every failure
/// of the returned report is such a graph. h must be a linear forest.
CampaignReport free_family_scan(const std::vector<std::string>& lines, const std::string& corpus_name,
                                const Graph& h, const CampaignOptions& options = {});

/// Induced linear forests of a graph, classified by component orders.
struct LinearForestSurvey {
  int max_order = 0;
  /// Component-order multisets (descending) of induced linear forests, by
  /// number of vertices.
  std::map<int, std::set<std::vector<int>>> classes;
};

LinearForestSurvey induced_linear_forests(const Graph& g);

}  // namespace gallai
