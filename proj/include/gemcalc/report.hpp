#pragma once

// The per-graph analysis report behind `gemcalc analyze`.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gemcalc/colored_graph.hpp"
#include "gemcalc/dim4.hpp"
#include "gemcalc/half_int.hpp"

namespace gemcalc {

/// Caller-supplied facts about the manifold a crystallization represents.
struct Metadata {
  int m = 0;  // rank of the fundamental group
  bool closed_manifold_asserted = false;
};

/// {"m": int >= 0, "closed_manifold_asserted": bool}; throws ParseError.
Metadata parse_metadata(std::string_view text);

struct AnalysisReport {
  nlohmann::ordered_json data;
  std::vector<NamedCheck> checks;

  bool ok() const;
  /// Name of the first failing check, empty when all hold.
  std::string first_violation() const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// Full report for a connected graph with d >= 2. With metadata asserting a
/// closed 4-manifold the crystallization section is added; metadata that the
/// graph contradicts (wrong d, some g_î != 1, not a singular manifold,
/// negative t) throws ValidationError.
AnalysisReport analyze(const ColoredGraph& g, const std::optional<Metadata>& metadata = std::nullopt);

/// Integer-valued halves as JSON integers, the rest as x.5 numbers.
nlohmann::ordered_json half_to_json(HalfInt h);

}  // namespace gemcalc
