#pragma once

// Low-dimensional topology read off colored graphs: surfaces (d = 2), closed
// 3-manifold recognition through sphere links (d = 3), and the 4-dimensional
// machinery built on pairs of associated cyclic permutations of {0,...,4}.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gemcalc/colored_graph.hpp"
#include "gemcalc/cyclic_perm.hpp"
#include "gemcalc/half_int.hpp"

namespace gemcalc {

/// (ε0, ε2, ε4, ε1, ε3), canonicalized. Its edges are exactly the pairs of
/// {0,...,4} that are not edges of ε.
CyclicPerm associated_permutation(const CyclicPerm& perm);

/// The six unordered pairs {ε, ε'} covering all twelve permutations, ordered
/// by their smaller member.
const std::vector<std::pair<CyclicPerm, CyclicPerm>>& associated_pairs();

struct SurfaceType {
  bool orientable = false;
  std::int64_t euler_characteristic = 0;
  HalfInt genus;  // genus if orientable, half the non-orientable genus otherwise
};

SurfaceType surface_type(const ColoredGraph& g);

/// Every 3-colored residue is a 2-sphere.
bool is_closed_3_manifold(const ColoredGraph& g);

/// Every 4-colored residue passes is_closed_3_manifold.
bool is_singular_4_manifold(const ColoredGraph& g);

/// (ρ_ε + ρ_ε') - p + Σ g_î - 2. Requires a singular 4-manifold.
std::int64_t euler_char_via_genus(const ColoredGraph& g, const CyclicPerm& perm);

/// 2(ρ_ε' - ρ_ε) = Σ g_{ε_j ε_{j+1}} - Σ g_{ε_j ε_{j+2}}
bool check_difference_a(const ColoredGraph& g, const CyclicPerm& perm);

/// ρ_ε' - ρ_ε = Σ g_{ε_j ε_{j+1} ε_{j+2}} - Σ g_{ε_j ε_{j+2} ε_{j+4}}, with every
/// triple residue counted directly. Also requires check_triple_lemma.
bool check_difference_b(const ColoredGraph& g, const CyclicPerm& perm);

/// 2 g_rst = g_rs + g_rt + g_st - p on all ten triples.
bool check_triple_lemma(const ColoredGraph& g);

struct CorollaryCheck {
  bool holds_left = false;   // ω_G = 12 ρ(Γ)
  bool holds_right = false;  // Σ g_{ε_j ε_{j+1}} = Σ g_{ε_j ε_{j+2}} for every ε
};

CorollaryCheck check_corollary_12rho(const ColoredGraph& g);

/// ω_G(Γ) = 3(p + 4 - Σ g_î) + Σ_i ω_G(Γ_î), residue degrees summed over
/// components; additionally Σ_i ω_G(Γ_î) ≡ 0 (mod 3).
bool residue_degree_identity(const ColoredGraph& g);
/// Σ_i ω_G(Γ_î) with each component's degree from the closed formula.
std::int64_t residue_degree_sum(const ColoredGraph& g);

struct CrystallizationProfile {
  int m = 0;                                      // rank of the fundamental group (caller-supplied)
  std::int64_t p = 0;
  std::int64_t euler_characteristic = 0;
  std::map<ColorSet, std::int64_t> g_triples;     // all ten 3-subsets
  std::map<ColorSet, std::int64_t> t_triples;     // g - 1 - m
  std::int64_t q = 0;                             // Σ t
  std::int64_t p_bar = 0;                         // 3χ + 5(2m - 1)

  std::int64_t t(Color a, Color b, Color c) const { return t_triples.at(ColorSet{a, b, c}); }
};

/// Ledger of a crystallization of a closed 4-manifold with rk π1 = m.
/// Throws PreconditionError when some g_î != 1 or g is not a singular
/// 4-manifold, and InvariantViolation on a negative t or p != p_bar + q.
CrystallizationProfile crystallization_profile(const ColoredGraph& g, int m);

enum class CrystallizationKind { semi_simple, weak_semi_simple, neither };

std::string to_string(CrystallizationKind kind);

struct ClassificationResult {
  CrystallizationKind kind = CrystallizationKind::neither;
  std::optional<CyclicPerm> witness;  // ε whose five consecutive triples all have t = 0
  bool satisfies_12rho = false;
};

/// Kind from the vanishing pattern of t. The three equivalent characterizations
/// of weak semi-simplicity, the q <= 2 sufficiency, and semi-simple =
/// weak semi-simple and 12ρ are all evaluated; any disagreement throws
/// InvariantViolation.
ClassificationResult classify_crystallization(const CrystallizationProfile& profile, const ColoredGraph& g);

struct NamedCheck {
  std::string name;
  bool holds = false;
};

/// Remaining crystallization identities: p = p_bar + q; for every associated
/// pair ordered with ρ_ε <= ρ_ε': ρ_ε' - ρ_ε = q - 2 Σ t_{ε_i ε_{i+2} ε_{i+4}} <= q,
/// ρ_ε = 2χ + 5m - 4 + Σ t_{ε_i ε_{i+2} ε_{i+4}}, and both double
/// inequalities bounding χ.
std::vector<NamedCheck> crystallization_identities(const CrystallizationProfile& profile, const ColoredGraph& g);

}  // namespace gemcalc
