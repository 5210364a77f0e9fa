#pragma once

// Edge-colored graphs ("gems"): a vertex set of even order 2p together with
// d+1 fixed-point-free involutions, one per color of {0,...,d}.
//
// Vertices are 0-based in this API. The JSON gem format and all diagnostics
// use the 1-based labels 1..2p.

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gemcalc/errors.hpp"

namespace gemcalc {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

inline constexpr int kMaxColors = 16;
inline constexpr int kMaxDimension = kMaxColors - 1;

/// A subset of the color set, stored as a bitmask.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint32_t mask) : mask_(mask) {}
  ColorSet(std::initializer_list<Color> colors);

  /// {0,...,d}
  static constexpr ColorSet all(int d) { return ColorSet((std::uint32_t{1} << (d + 1)) - 1); }
  /// {0,...,d} minus c
  static constexpr ColorSet all_but(Color c, int d) {
    return ColorSet(all(d).mask_ & ~(std::uint32_t{1} << c));
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool contains(Color c) const { return (mask_ >> c) & 1u; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool subset_of(ColorSet other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr ColorSet with(Color c) const { return ColorSet(mask_ | (std::uint32_t{1} << c)); }

  std::vector<Color> members() const;
  /// Concatenated digits, e.g. "013"; colors above 9 are comma separated.
  std::string label() const;

  friend constexpr bool operator==(ColorSet, ColorSet) = default;
  friend constexpr auto operator<=>(ColorSet, ColorSet) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Number of B-residues for every B, indexed by bitmask.
class ResidueTable {
 public:
  ResidueTable() = default;
  ResidueTable(int dimension, std::size_t order, std::vector<std::uint32_t> counts)
      : dimension_(dimension), order_(order), counts_(std::move(counts)) {}

  int dimension() const { return dimension_; }
  std::size_t order() const { return order_; }
  std::uint32_t count(ColorSet colors) const { return counts_.at(colors.mask()); }

 private:
  int dimension_ = 0;
  std::size_t order_ = 0;
  std::vector<std::uint32_t> counts_;
};

class ColoredGraph {
 public:
  /// `matchings[c][v]` is the c-neighbour of v (0-based). Throws ValidationError
  /// on loops, non-involutions, odd or empty vertex sets, or a color count other
  /// than d+1.
  ColoredGraph(int d, std::vector<std::vector<Vertex>> matchings);

  int dimension() const { return d_; }
  std::size_t order() const { return order_; }
  std::size_t half_order() const { return order_ / 2; }
  int color_count() const { return d_ + 1; }

  Vertex neighbor(Color c, Vertex v) const { return adj_[c * order_ + v]; }
  std::span<const Vertex> matching(Color c) const {
    return {adj_.data() + c * order_, order_};
  }

  /// Memoized table of all g_B. Computed once, thread-safe.
  const ResidueTable& residues() const;
  /// g_B; throws PreconditionError when B is not a subset of {0,...,d}.
  std::uint32_t residue_count(ColorSet colors) const;

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.d_ == b.d_ && a.order_ == b.order_ && a.adj_ == b.adj_;
  }

 private:
  struct Cache;

  int d_ = 0;
  std::size_t order_ = 0;
  std::vector<Vertex> adj_;  // (d+1) x order, row-major by color
  std::shared_ptr<Cache> cache_;
};

/// One connected component of a restricted subgraph, re-indexed as a standalone gem.
struct Residue {
  ColoredGraph graph;
  std::vector<Color> colors;     // graph color i was colors[i] in the parent
  std::vector<Vertex> vertices;  // graph vertex j was vertices[j] in the parent
};

ColoredGraph parse_gem(std::string_view text);
/// Compact JSON, keys in the order d, vertices, matchings.
std::string serialize_gem(const ColoredGraph& g);

std::uint32_t residue_count(const ColoredGraph& g, ColorSet colors);
bool is_bipartite(const ColoredGraph& g);
bool is_connected(const ColoredGraph& g);

/// N_0..N_d: N_{d-h} is the number of h-residues, over all h-subsets of colors.
std::vector<std::int64_t> simplex_counts(const ColoredGraph& g);
std::int64_t euler_characteristic_complex(const ColoredGraph& g);

/// Component of `vertex` in the subgraph keeping only the colors of `colors`.
Residue subgraph(const ColoredGraph& g, ColorSet colors, Vertex vertex);
/// Every component of that subgraph, ordered by smallest original vertex.
std::vector<Residue> residues_of(const ColoredGraph& g, ColorSet colors);

/// Image of g under the vertex bijection v -> perm[v].
ColoredGraph relabel(const ColoredGraph& g, std::span<const Vertex> perm);

/// Σ_{r<s} g_{rs}
std::int64_t pair_residue_sum(const ColoredGraph& g);

}  // namespace gemcalc
