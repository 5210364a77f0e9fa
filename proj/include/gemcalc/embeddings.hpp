#pragma once

// Regular genera of a colored graph, one per cyclic permutation of its colors,
// and the Gurau degree (sum of all of them) computed two ways.

#include <cstdint>
#include <vector>

#include "gemcalc/colored_graph.hpp"
#include "gemcalc/cycle_decomp.hpp"
#include "gemcalc/cyclic_perm.hpp"
#include "gemcalc/half_int.hpp"

namespace gemcalc {

/// Σ_j g_{ε_j ε_{j+1}}: the face count of the regular embedding for ε.
std::int64_t bicolored_face_count(const ColoredGraph& g, const CyclicPerm& perm);

/// ρ_ε, from 2 - 2ρ_ε = Σ_j g_{ε_j ε_{j+1}} + (1-d)p. Requires g connected.
HalfInt regular_genus(const ColoredGraph& g, const CyclicPerm& perm);

/// ρ_ε for every canonical ε, in cyclic_permutations(d) order.
std::vector<HalfInt> regular_genera(const ColoredGraph& g);

/// Sum of all regular genera. Ground truth for the degree.
HalfInt g_degree_definition(const ColoredGraph& g);

/// (d-1)!/2 * (d + p(d-1)d/2 - Σ g_rs); d >= 3 only.
HalfInt g_degree_formula(const ColoredGraph& g);

/// 2 ω_G / (d-1)!; throws InvariantViolation if that is not an integer.
std::int64_t reduced_g_degree(const ColoredGraph& g);

/// Sum of ρ_ε over the cycles of one decomposition class of K_{d+1}.
HalfInt class_genus_sum(const ColoredGraph& g, const DecompositionClass& cls);

struct GenusMinimum {
  HalfInt genus;
  std::vector<CyclicPerm> minimizers;  // canonical order
};

/// ρ(Γ) and every permutation attaining it.
GenusMinimum regular_genus_min(const ColoredGraph& g);

/// (d-1)! as an integer; d <= 20.
std::int64_t factorial(int k);

}  // namespace gemcalc
