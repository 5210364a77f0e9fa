#include "gemcalc/embeddings.hpp"

#include <algorithm>

namespace gemcalc {

namespace {

void require_connected(const ColoredGraph& g, const char* what) {
  if (!is_connected(g)) throw PreconditionError(std::string(what) + " requires a connected graph");
}

void require_matching_dimension(const ColoredGraph& g, const CyclicPerm& perm) {
  if (perm.dimension() != g.dimension()) {
    throw PreconditionError("permutation " + perm.to_string() + " is over 0.." + std::to_string(perm.dimension()) +
                            " but the graph has d = " + std::to_string(g.dimension()));
  }
}

HalfInt genus_from_faces(const ColoredGraph& g, std::int64_t faces) {
  const std::int64_t d = g.dimension();
  const auto p = static_cast<std::int64_t>(g.half_order());
  return HalfInt::from_twice(2 - faces - (1 - d) * p);
}

}  // namespace

std::int64_t factorial(int k) {
  if (k < 0 || k > 20) throw PreconditionError("factorial argument out of range");
  std::int64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

std::int64_t bicolored_face_count(const ColoredGraph& g, const CyclicPerm& perm) {
  require_matching_dimension(g, perm);
  const auto& table = g.residues();
  std::int64_t faces = 0;
  for (auto [a, b] : perm.edges()) faces += table.count(ColorSet{a, b});
  return faces;
}

HalfInt regular_genus(const ColoredGraph& g, const CyclicPerm& perm) {
  require_matching_dimension(g, perm);
  require_connected(g, "regular_genus");
  return genus_from_faces(g, bicolored_face_count(g, perm));
}

std::vector<HalfInt> regular_genera(const ColoredGraph& g) {
  require_connected(g, "regular_genera");
  const auto& perms = cyclic_permutations(g.dimension());
  std::vector<HalfInt> out;
  out.reserve(perms.size());
  for (const auto& perm : perms) out.push_back(genus_from_faces(g, bicolored_face_count(g, perm)));
  return out;
}

HalfInt g_degree_definition(const ColoredGraph& g) {
  HalfInt total;
  for (HalfInt rho : regular_genera(g)) total += rho;
  return total;
}

HalfInt g_degree_formula(const ColoredGraph& g) {
  const std::int64_t d = g.dimension();
  if (d < 3) throw PreconditionError("closed G-degree formula needs d >= 3; use g_degree_definition");
  require_connected(g, "g_degree_formula");
  const auto p = static_cast<std::int64_t>(g.half_order());
  const std::int64_t reduced = d + p * (d - 1) * d / 2 - pair_residue_sum(g);
  return HalfInt(factorial(static_cast<int>(d - 1)) / 2 * reduced);
}

std::int64_t reduced_g_degree(const ColoredGraph& g) {
  const int d = g.dimension();
  if (d < 3) throw PreconditionError("reduced G-degree needs d >= 3");
  const HalfInt omega = g_degree_definition(g);
  // ω' = 2ω/(d-1)! = ω.twice()/(d-1)!
  const std::int64_t denom = factorial(d - 1);
  if (omega.twice() % denom != 0) {
    throw InvariantViolation("G-degree " + omega.to_string() + " is not a multiple of (d-1)!/2 = " +
                             HalfInt::from_twice(denom).to_string());
  }
  return omega.twice() / denom;
}

HalfInt class_genus_sum(const ColoredGraph& g, const DecompositionClass& cls) {
  if (cls.n != g.dimension() + 1 || !validate_class(cls)) {
    throw PreconditionError("invalid decomposition class for d = " + std::to_string(g.dimension()));
  }
  HalfInt total;
  for (const auto& perm : cls.cycles) total += regular_genus(g, perm);
  return total;
}

GenusMinimum regular_genus_min(const ColoredGraph& g) {
  const auto& perms = cyclic_permutations(g.dimension());
  auto genera = regular_genera(g);
  GenusMinimum out{*std::min_element(genera.begin(), genera.end()), {}};
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (genera[i] == out.genus) out.minimizers.push_back(perms[i]);
  }
  return out;
}

}  // namespace gemcalc
