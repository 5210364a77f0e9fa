#include "gemcalc/report.hpp"

#include <algorithm>
#include <sstream>

#include "gemcalc/embeddings.hpp"
#include "gemcalc/verify.hpp"

namespace gemcalc {

namespace {

using Json = nlohmann::ordered_json;

void require_crystallization(const ColoredGraph& g, int m) {
  if (g.dimension() != 4) throw ValidationError("crystallization metadata applies to d = 4 only");
  for (Color i = 0; i <= 4; ++i) {
    if (g.residue_count(ColorSet::all_but(i, 4)) != 1) {
      throw ValidationError("metadata asserts a crystallization but g_" + ColorSet::all_but(i, 4).label() + " = " +
                            std::to_string(g.residue_count(ColorSet::all_but(i, 4))));
    }
  }
  if (!is_singular_4_manifold(g)) {
    throw ValidationError("metadata asserts a closed manifold but some 4-residue is not a closed 3-manifold");
  }
  for (Color a = 0; a <= 4; ++a) {
    for (Color b = a + 1; b <= 4; ++b) {
      for (Color c = b + 1; c <= 4; ++c) {
        const ColorSet s{a, b, c};
        if (static_cast<std::int64_t>(g.residue_count(s)) < 1 + m) {
          throw ValidationError("metadata m = " + std::to_string(m) + " gives t_" + s.label() + " < 0 (g_" +
                                s.label() + " = " + std::to_string(g.residue_count(s)) + ")");
        }
      }
    }
  }
}

Json crystallization_section(const ColoredGraph& g, int m) {
  const auto profile = crystallization_profile(g, m);
  const auto result = classify_crystallization(profile, g);
  Json t = Json::object();
  for (const auto& [set, value] : profile.t_triples) t[set.label()] = value;
  Json j;
  j["m"] = m;
  j["t"] = std::move(t);
  j["q"] = profile.q;
  j["p_bar"] = profile.p_bar;
  j["kind"] = to_string(result.kind);
  j["witness"] = result.witness ? Json(result.witness->to_string()) : Json(nullptr);
  j["satisfies_12rho"] = result.satisfies_12rho;
  return j;
}

std::string bool_text(bool b) { return b ? "yes" : "no"; }

}  // namespace

Json half_to_json(HalfInt h) {
  if (h.is_integer()) return Json(h.integer());
  return Json(static_cast<double>(h.twice()) / 2.0);
}

Metadata parse_metadata(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("metadata is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("metadata must be a JSON object");
  if (!j.contains("m") || !j["m"].is_number_integer() || j["m"].get<std::int64_t>() < 0) {
    throw ParseError("metadata needs a non-negative integer \"m\"");
  }
  if (!j.contains("closed_manifold_asserted") || !j["closed_manifold_asserted"].is_boolean()) {
    throw ParseError("metadata needs a boolean \"closed_manifold_asserted\"");
  }
  if (j["m"].get<std::int64_t>() > 1'000'000) throw ParseError("metadata \"m\" is out of range");
  return {j["m"].get<int>(), j["closed_manifold_asserted"].get<bool>()};
}

bool AnalysisReport::ok() const { return first_violation().empty(); }

std::string AnalysisReport::first_violation() const {
  for (const auto& c : checks) {
    if (!c.holds) return c.name;
  }
  return {};
}

Json AnalysisReport::to_json() const { return data; }

AnalysisReport analyze(const ColoredGraph& g, const std::optional<Metadata>& metadata) {
  const int d = g.dimension();
  if (d < 2) throw PreconditionError("analysis needs d >= 2");
  if (!is_connected(g)) throw PreconditionError("analysis needs a connected graph; regular genera are undefined otherwise");
  std::optional<int> rank;
  if (metadata && metadata->closed_manifold_asserted) {
    require_crystallization(g, metadata->m);
    rank = metadata->m;
  } else if (metadata && d != 4) {
    throw ValidationError("crystallization metadata applies to d = 4 only");
  }

  AnalysisReport report;
  Json& j = report.data;
  j["schema"] = kReportSchema;
  j["command"] = "analyze";
  j["graph"] = {{"d", d}, {"p", g.half_order()}, {"order", g.order()}, {"bipartite", is_bipartite(g)}, {"connected", true}};

  Json pairs = Json::object();
  for (Color r = 0; r <= static_cast<Color>(d); ++r) {
    for (Color s = r + 1; s <= static_cast<Color>(d); ++s) pairs[ColorSet{r, s}.label()] = g.residue_count({r, s});
  }
  Json hats = Json::array();
  for (Color i = 0; i <= static_cast<Color>(d); ++i) hats.push_back(g.residue_count(ColorSet::all_but(i, d)));
  j["residues"] = {{"pairs", std::move(pairs)}, {"complements", std::move(hats)}};
  j["simplex_counts"] = simplex_counts(g);
  j["euler_characteristic"] = euler_characteristic_complex(g);

  const auto& perms = cyclic_permutations(d);
  const auto genera = regular_genera(g);
  Json gj = Json::array();
  for (std::size_t i = 0; i < perms.size(); ++i) {
    gj.push_back({{"perm", perms[i].to_string()}, {"genus", half_to_json(genera[i])}});
  }
  j["regular_genera"] = std::move(gj);
  const auto minimum = regular_genus_min(g);
  Json mins = Json::array();
  for (const auto& e : minimum.minimizers) mins.push_back(e.to_string());
  j["regular_genus"] = {{"value", half_to_json(minimum.genus)}, {"minimizers", std::move(mins)}};

  const HalfInt omega = g_degree_definition(g);
  Json degree;
  degree["definition"] = half_to_json(omega);
  if (d >= 3) {
    degree["formula"] = half_to_json(g_degree_formula(g));
    if (omega.twice() % factorial(d - 1) == 0) {
      degree["reduced"] = omega.twice() / factorial(d - 1);
    } else {
      degree["reduced"] = nullptr;
    }
  }
  j["g_degree"] = std::move(degree);

  if (d == 2) {
    const auto s = surface_type(g);
    j["surface"] = {{"orientable", s.orientable}, {"euler_characteristic", s.euler_characteristic},
                    {"genus", half_to_json(s.genus)}};
  }

  if (d == 4) {
    Json d4;
    Json pj = Json::array();
    for (const auto& [e, f] : associated_pairs()) {
      pj.push_back({{"perm", e.to_string()}, {"associated", f.to_string()},
                    {"genus_sum", half_to_json(regular_genus(g, e) + regular_genus(g, f))}});
    }
    d4["associated_pairs"] = std::move(pj);
    const bool singular = is_singular_4_manifold(g);
    d4["singular_manifold"] = singular;
    if (singular) {
      const auto& [e, f] = associated_pairs().front();
      d4["euler_characteristic_via_genus"] = euler_char_via_genus(g, e);
    }
    const auto corollary = check_corollary_12rho(g);
    d4["degree_is_12rho"] = corollary.holds_left;
    d4["residue_degree_sum"] = residue_degree_sum(g);
    if (rank) d4["crystallization"] = crystallization_section(g, *rank);
    j["dim4"] = std::move(d4);
  }

  report.checks = verify_graph(g, rank).checks;
  Json cj = Json::object();
  for (const auto& c : report.checks) cj[c.name] = c.holds;
  j["checks"] = std::move(cj);
  const auto failing = report.first_violation();
  j["violation"] = failing.empty() ? Json(nullptr) : Json(failing);
  return report;
}

std::string AnalysisReport::to_text() const {
  std::ostringstream os;
  const Json& j = data;
  std::size_t width = 24;
  for (const auto& [name, result] : j["checks"].items()) width = std::max(width, name.size() + 2);
  auto row = [&](const std::string& key, const std::string& value) {
    os << "  " << key << std::string(key.size() < width ? width - key.size() : 1, ' ') << value << "\n";
  };
  const Json& graph = j["graph"];
  os << "graph\n";
  row("d", graph["d"].dump());
  row("p", graph["p"].dump());
  row("bipartite", bool_text(graph["bipartite"].get<bool>()));
  os << "residues\n";
  for (const auto& [label, count] : j["residues"]["pairs"].items()) row("g_" + label, count.dump());
  const Json& hats = j["residues"]["complements"];
  for (std::size_t i = 0; i < hats.size(); ++i) row("g_^" + std::to_string(i), hats[i].dump());
  os << "complex\n";
  row("simplices", j["simplex_counts"].dump());
  row("euler characteristic", j["euler_characteristic"].dump());
  os << "regular genera\n";
  for (const auto& e : j["regular_genera"]) row(e["perm"].get<std::string>(), e["genus"].dump());
  row("rho", j["regular_genus"]["value"].dump());
  row("minimizers", std::to_string(j["regular_genus"]["minimizers"].size()));
  os << "degree\n";
  for (const auto& [key, value] : j["g_degree"].items()) row(key, value.dump());
  if (j.contains("surface")) {
    os << "surface\n";
    row("orientable", bool_text(j["surface"]["orientable"].get<bool>()));
    row("genus", j["surface"]["genus"].dump());
  }
  if (j.contains("dim4")) {
    const Json& d4 = j["dim4"];
    os << "dimension 4\n";
    for (const auto& pair : d4["associated_pairs"]) {
      row(pair["perm"].get<std::string>() + " " + pair["associated"].get<std::string>(), pair["genus_sum"].dump());
    }
    row("singular manifold", bool_text(d4["singular_manifold"].get<bool>()));
    if (d4.contains("euler_characteristic_via_genus")) row("chi via genus", d4["euler_characteristic_via_genus"].dump());
    row("degree = 12 rho", bool_text(d4["degree_is_12rho"].get<bool>()));
    row("residue degree sum", d4["residue_degree_sum"].dump());
    if (d4.contains("crystallization")) {
      const Json& c = d4["crystallization"];
      os << "crystallization\n";
      row("m", c["m"].dump());
      row("q", c["q"].dump());
      row("p_bar", c["p_bar"].dump());
      row("kind", c["kind"].get<std::string>());
      if (!c["witness"].is_null()) row("witness", c["witness"].get<std::string>());
    }
  }
  os << "checks\n";
  for (const auto& c : checks) row(c.name, c.holds ? "holds" : "VIOLATED");
  return os.str();
}

}  // namespace gemcalc
