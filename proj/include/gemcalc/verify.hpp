#pragma once

// The invariant suite run over graph corpora: every identity and divisibility
// statement that applies to a graph's dimension, evaluated and tallied.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gemcalc/colored_graph.hpp"
#include "gemcalc/dim4.hpp"

namespace gemcalc {

inline constexpr const char* kReportSchema = "gemcalc.report/1";

struct GraphFacts {
  bool bipartite = false;
  bool singular_manifold = false;  // evaluated for d = 4 only
  bool odd_reduced = false;        // d >= 3
  bool crystallization = false;    // accepted by crystallization_profile
};

struct GraphVerification {
  GraphFacts facts;
  std::vector<NamedCheck> checks;  // only the checks that apply to this graph

  bool all_hold() const;
};

/// Runs every applicable check on a connected graph. `rank` is the π1 rank
/// asserted for the crystallization checks (d = 4); nullopt skips them.
GraphVerification verify_graph(const ColoredGraph& g, std::optional<int> rank = 0);

enum class CampaignMode { exhaustive, random };

struct CampaignOptions {
  int d = 4;
  CampaignMode mode = CampaignMode::random;
  std::size_t min_p = 1;
  std::size_t max_p = 4;
  std::size_t count = 1000;  // random mode: samples per p
  std::uint64_t seed = 1;
  bool bipartite_only = false;
  unsigned threads = 0;      // 0: GEMCALC_THREADS or hardware concurrency
};

struct CheckTally {
  std::uint64_t evaluated = 0;
  std::uint64_t violations = 0;
};

struct Counterexample {
  std::string check;
  std::size_t p = 0;
  std::string gem;  // serialized
};

struct CampaignReport {
  CampaignOptions options;
  std::uint64_t graphs = 0;
  std::uint64_t bipartite = 0;
  std::uint64_t singular_manifold = 0;
  std::uint64_t odd_reduced = 0;
  std::uint64_t crystallizations = 0;
  std::map<std::string, CheckTally> checks;
  std::optional<Counterexample> counterexample;  // first in corpus order

  bool ok() const { return !counterexample.has_value(); }
  std::uint64_t violations() const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// Worker count: `requested` if non-zero, else GEMCALC_THREADS, else the
/// hardware concurrency; at least 1.
unsigned worker_count(unsigned requested);

CampaignReport run_campaign(const CampaignOptions& options);

std::string to_string(CampaignMode mode);

}  // namespace gemcalc
