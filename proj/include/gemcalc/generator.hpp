#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "gemcalc/colored_graph.hpp"

namespace gemcalc {

struct GenSpec {
  int d = 4;
  std::size_t p = 1;
  bool connected_only = true;
  bool bipartite_only = false;
  bool nonbipartite_only = false;
  std::uint64_t seed = 0;
  std::size_t count = 1;
};

/// Throws PreconditionError unless d >= 2, p >= 1, count >= 1 and the
/// parity filters are not both set.
void validate(const GenSpec& spec);

/// Two vertices joined by every color: the order-2 gem of S^d.
ColoredGraph dipole(int d);

/// Uniform integer in [0, bound). Defined on the raw 64-bit engine output so
/// results are identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform random perfect matching of 2p points, as an involution.
std::vector<Vertex> random_matching(std::mt19937_64& rng, std::size_t p);

/// `spec.count` graphs whose colors are independent uniform perfect matchings,
/// filtered by rejection. With bipartite_only every matching is drawn across a
/// random balanced bipartition instead. Deterministic in spec.seed; throws
/// PreconditionError if the filters reject too many draws.
std::vector<ColoredGraph> random_gem(const GenSpec& spec);

/// All perfect matchings of 2p points (as involutions), in lexicographic order.
std::vector<std::vector<Vertex>> perfect_matchings(std::size_t p);

/// ((2p-1)!!)^d: the number of tuples enumerate_gems walks.
std::uint64_t enumeration_size(int d, std::size_t p);
/// Largest enumeration_size accepted by enumerate_gems.
inline constexpr std::uint64_t kEnumerationBudget = 2'000'000;

/// Receives each graph; return false to stop the enumeration.
using GemVisitor = std::function<bool(const ColoredGraph&)>;

/// Every (d+1)-tuple of perfect matchings with color 0 fixed to
/// (1 2)(3 4)..., in lexicographic order. Throws PreconditionError past the budget.
void enumerate_gems(int d, std::size_t p, bool connected_only, const GemVisitor& visit);

/// The slice of enumerate_gems whose color-1 matching index lies in the
/// shard's contiguous block. Concatenating shards 0..count-1 reproduces the
/// full stream.
void enumerate_gems_shard(int d, std::size_t p, bool connected_only, std::size_t shard, std::size_t shard_count,
                          const GemVisitor& visit);

/// First connected non-bipartite 3-colored gem with Euler characteristic 1
/// (a projective plane), scanning p = 1, 2, ... exhaustively.
ColoredGraph search_rp2();

/// First connected gem of even d >= 4 with odd reduced G-degree: exhaustive
/// for every p within the enumeration budget, then 20000 seeded random draws
/// per remaining p, up to max_p.
std::optional<ColoredGraph> search_odd_reduced(int d, std::size_t max_p);

}  // namespace gemcalc
