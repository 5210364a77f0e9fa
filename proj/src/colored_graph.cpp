#include "gemcalc/colored_graph.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <queue>

#include <json.hpp>

namespace gemcalc {

namespace {

// Union-find with path halving; sized for one residue query.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Vertex{0}); }

  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  void reset() { std::iota(parent_.begin(), parent_.end(), Vertex{0}); }

 private:
  std::vector<Vertex> parent_;
};

std::uint32_t count_components(const ColoredGraph& g, ColorSet colors, DisjointSets& sets) {
  sets.reset();
  auto components = static_cast<std::uint32_t>(g.order());
  for (Color c : colors.members()) {
    auto mu = g.matching(c);
    for (Vertex v = 0; v < mu.size(); ++v) {
      if (v < mu[v] && sets.unite(v, mu[v])) --components;
    }
  }
  return components;
}

std::string vertex_label(Vertex v) { return "vertex " + std::to_string(v + 1); }

}  // namespace

ColorSet::ColorSet(std::initializer_list<Color> colors) {
  for (Color c : colors) mask_ |= std::uint32_t{1} << c;
}

std::vector<Color> ColorSet::members() const {
  std::vector<Color> out;
  out.reserve(size());
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<Color>(std::countr_zero(m)));
  return out;
}

std::string ColorSet::label() const {
  std::string s;
  auto cs = members();
  bool wide = !cs.empty() && cs.back() > 9;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (wide && i > 0) s += ',';
    s += std::to_string(cs[i]);
  }
  return s;
}

struct ColoredGraph::Cache {
  std::once_flag once;
  ResidueTable table;
};

ColoredGraph::ColoredGraph(int d, std::vector<std::vector<Vertex>> matchings) : d_(d) {
  if (d < 0 || d > kMaxDimension) {
    throw ValidationError("dimension " + std::to_string(d) + " outside 0.." + std::to_string(kMaxDimension));
  }
  if (matchings.size() != static_cast<std::size_t>(d + 1)) {
    throw ValidationError("wrong color count: expected " + std::to_string(d + 1) + " matchings, got " +
                          std::to_string(matchings.size()));
  }
  order_ = matchings.front().size();
  if (order_ == 0) throw ValidationError("graph has no vertices");
  if (order_ % 2 != 0) throw ValidationError("odd vertex count " + std::to_string(order_));

  adj_.reserve(matchings.size() * order_);
  for (std::size_t c = 0; c < matchings.size(); ++c) {
    const auto& mu = matchings[c];
    const std::string color = "color " + std::to_string(c);
    if (mu.size() != order_) {
      throw ValidationError(color + ": matching has " + std::to_string(mu.size()) + " entries, expected " +
                            std::to_string(order_));
    }
    for (Vertex v = 0; v < order_; ++v) {
      if (mu[v] >= order_) {
        throw ValidationError(color + ", " + vertex_label(v) + ": neighbour " + std::to_string(mu[v] + 1) +
                              " out of range");
      }
      if (mu[v] == v) throw ValidationError(color + ", " + vertex_label(v) + ": loop forbidden");
    }
    for (Vertex v = 0; v < order_; ++v) {
      if (mu[mu[v]] != v) {
        throw ValidationError(color + ", " + vertex_label(v) + ": not an involution (maps to " +
                              std::to_string(mu[v] + 1) + ", which maps to " + std::to_string(mu[mu[v]] + 1) + ")");
      }
    }
    adj_.insert(adj_.end(), mu.begin(), mu.end());
  }
  cache_ = std::make_shared<Cache>();
}

const ResidueTable& ColoredGraph::residues() const {
  std::call_once(cache_->once, [this] {
    const std::uint32_t subsets = std::uint32_t{1} << (d_ + 1);
    std::vector<std::uint32_t> counts(subsets);
    DisjointSets sets(order_);
    for (std::uint32_t mask = 0; mask < subsets; ++mask) counts[mask] = count_components(*this, ColorSet(mask), sets);
    cache_->table = ResidueTable(d_, order_, std::move(counts));
  });
  return cache_->table;
}

std::uint32_t ColoredGraph::residue_count(ColorSet colors) const {
  if (!colors.subset_of(ColorSet::all(d_))) {
    throw PreconditionError("color set {" + colors.label() + "} exceeds 0.." + std::to_string(d_));
  }
  return residues().count(colors);
}

ColoredGraph parse_gem(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed gem document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("malformed gem document: top level must be an object");
  for (const char* key : {"d", "vertices", "matchings"}) {
    if (!doc.contains(key)) throw ParseError(std::string("malformed gem document: missing \"") + key + "\"");
  }
  if (!doc["d"].is_number_integer()) throw ParseError("malformed gem document: \"d\" must be an integer");
  if (!doc["vertices"].is_number_integer()) throw ParseError("malformed gem document: \"vertices\" must be an integer");
  if (!doc["matchings"].is_array()) throw ParseError("malformed gem document: \"matchings\" must be an array");

  const auto d = doc["d"].get<std::int64_t>();
  const auto n = doc["vertices"].get<std::int64_t>();
  if (d < 0 || d > kMaxDimension) throw ParseError("dimension " + std::to_string(d) + " unsupported");
  if (n <= 0) throw ParseError("vertex count must be positive, got " + std::to_string(n));
  if (n % 2 != 0) throw ParseError("odd vertex count " + std::to_string(n));
  const auto& rows = doc["matchings"];
  if (rows.size() != static_cast<std::size_t>(d + 1)) {
    throw ParseError("wrong color count: d = " + std::to_string(d) + " needs " + std::to_string(d + 1) +
                     " matchings, got " + std::to_string(rows.size()));
  }

  std::vector<std::vector<Vertex>> matchings;
  matchings.reserve(rows.size());
  for (std::size_t c = 0; c < rows.size(); ++c) {
    const auto& row = rows[c];
    const std::string color = "color " + std::to_string(c);
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
      throw ParseError(color + ": matching must be an array of " + std::to_string(n) + " integers");
    }
    std::vector<Vertex> mu(static_cast<std::size_t>(n));
    for (std::size_t v = 0; v < mu.size(); ++v) {
      if (!row[v].is_number_integer()) throw ParseError(color + ", vertex " + std::to_string(v + 1) + ": not an integer");
      auto w = row[v].get<std::int64_t>();
      if (w < 1 || w > n) {
        throw ParseError(color + ", vertex " + std::to_string(v + 1) + ": neighbour " + std::to_string(w) +
                         " out of range 1.." + std::to_string(n));
      }
      mu[v] = static_cast<Vertex>(w - 1);
    }
    matchings.push_back(std::move(mu));
  }
  try {
    return ColoredGraph(static_cast<int>(d), std::move(matchings));
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_gem(const ColoredGraph& g) {
  nlohmann::ordered_json doc;
  doc["d"] = g.dimension();
  doc["vertices"] = g.order();
  auto rows = nlohmann::ordered_json::array();
  for (int c = 0; c <= g.dimension(); ++c) {
    auto row = nlohmann::ordered_json::array();
    for (Vertex w : g.matching(static_cast<Color>(c))) row.push_back(w + 1);
    rows.push_back(std::move(row));
  }
  doc["matchings"] = std::move(rows);
  return doc.dump();
}

std::uint32_t residue_count(const ColoredGraph& g, ColorSet colors) { return g.residue_count(colors); }

bool is_bipartite(const ColoredGraph& g) {
  std::vector<int> side(g.order(), -1);
  std::queue<Vertex> frontier;
  for (Vertex start = 0; start < g.order(); ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    frontier.push(start);
    while (!frontier.empty()) {
      Vertex v = frontier.front();
      frontier.pop();
      for (int c = 0; c <= g.dimension(); ++c) {
        Vertex w = g.neighbor(static_cast<Color>(c), v);
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          frontier.push(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_connected(const ColoredGraph& g) { return g.residue_count(ColorSet::all(g.dimension())) == 1; }

std::vector<std::int64_t> simplex_counts(const ColoredGraph& g) {
  const int d = g.dimension();
  std::vector<std::int64_t> n(static_cast<std::size_t>(d + 1), 0);
  const auto& table = g.residues();
  const std::uint32_t subsets = std::uint32_t{1} << (d + 1);
  for (std::uint32_t mask = 0; mask + 1 < subsets; ++mask) {  // skip the full color set
    ColorSet b(mask);
    n[static_cast<std::size_t>(d - b.size())] += table.count(b);
  }
  return n;
}

std::int64_t euler_characteristic_complex(const ColoredGraph& g) {
  std::int64_t chi = 0;
  auto n = simplex_counts(g);
  for (std::size_t k = 0; k < n.size(); ++k) chi += (k % 2 == 0 ? n[k] : -n[k]);
  return chi;
}

Residue subgraph(const ColoredGraph& g, ColorSet colors, Vertex vertex) {
  if (colors.empty()) throw PreconditionError("subgraph needs a non-empty color set");
  if (!colors.subset_of(ColorSet::all(g.dimension()))) {
    throw PreconditionError("color set {" + colors.label() + "} exceeds 0.." + std::to_string(g.dimension()));
  }
  if (vertex >= g.order()) throw PreconditionError(vertex_label(vertex) + " out of range");

  auto palette = colors.members();
  std::vector<Vertex> local(g.order(), static_cast<Vertex>(-1));
  std::vector<Vertex> original;
  // Breadth-first order, then sorted so relabelling is canonical.
  std::queue<Vertex> frontier;
  local[vertex] = 0;
  frontier.push(vertex);
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    original.push_back(v);
    for (Color c : palette) {
      Vertex w = g.neighbor(c, v);
      if (local[w] == static_cast<Vertex>(-1)) {
        local[w] = 0;
        frontier.push(w);
      }
    }
  }
  std::sort(original.begin(), original.end());
  for (Vertex i = 0; i < original.size(); ++i) local[original[i]] = i;

  std::vector<std::vector<Vertex>> matchings;
  matchings.reserve(palette.size());
  for (Color c : palette) {
    std::vector<Vertex> mu(original.size());
    for (Vertex i = 0; i < original.size(); ++i) mu[i] = local[g.neighbor(c, original[i])];
    matchings.push_back(std::move(mu));
  }
  return Residue{ColoredGraph(static_cast<int>(palette.size()) - 1, std::move(matchings)), std::move(palette),
                 std::move(original)};
}

std::vector<Residue> residues_of(const ColoredGraph& g, ColorSet colors) {
  std::vector<Residue> out;
  std::vector<bool> seen(g.order(), false);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (seen[v]) continue;
    auto r = subgraph(g, colors, v);
    for (Vertex w : r.vertices) seen[w] = true;
    out.push_back(std::move(r));
  }
  return out;
}

ColoredGraph relabel(const ColoredGraph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw PreconditionError("relabelling has wrong length");
  std::vector<std::vector<Vertex>> matchings(static_cast<std::size_t>(g.color_count()), std::vector<Vertex>(g.order()));
  for (int c = 0; c <= g.dimension(); ++c) {
    for (Vertex v = 0; v < g.order(); ++v) {
      matchings[static_cast<std::size_t>(c)][perm[v]] = perm[g.neighbor(static_cast<Color>(c), v)];
    }
  }
  return ColoredGraph(g.dimension(), std::move(matchings));
}

std::int64_t pair_residue_sum(const ColoredGraph& g) {
  std::int64_t sum = 0;
  for (Color r = 0; r <= static_cast<Color>(g.dimension()); ++r) {
    for (Color s = r + 1; s <= static_cast<Color>(g.dimension()); ++s) sum += g.residue_count({r, s});
  }
  return sum;
}

}  // namespace gemcalc
