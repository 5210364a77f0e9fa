#include "gemcalc/dim4.hpp"

#include <algorithm>
#include <mutex>

#include "gemcalc/embeddings.hpp"

namespace gemcalc {

namespace {

void require_dimension(const ColoredGraph& g, int d, const char* what) {
  if (g.dimension() != d) {
    throw PreconditionError(std::string(what) + " needs d = " + std::to_string(d) + ", got d = " +
                            std::to_string(g.dimension()));
  }
}

void require_connected(const ColoredGraph& g, const char* what) {
  if (!is_connected(g)) throw PreconditionError(std::string(what) + " requires a connected graph");
}

// Σ_j g over the pairs {ε_j, ε_{j+step}}.
std::int64_t pair_sum(const ColoredGraph& g, const CyclicPerm& e, int step) {
  std::int64_t s = 0;
  for (int j = 0; j < 5; ++j) s += g.residue_count(ColorSet{e.cyclic(j), e.cyclic(j + step)});
  return s;
}

// Σ_j g over the triples {ε_j, ε_{j+step}, ε_{j+2 step}}.
std::int64_t triple_sum(const ColoredGraph& g, const CyclicPerm& e, int step) {
  std::int64_t s = 0;
  for (int j = 0; j < 5; ++j) s += g.residue_count(ColorSet{e.cyclic(j), e.cyclic(j + step), e.cyclic(j + 2 * step)});
  return s;
}

std::int64_t t_sum(const CrystallizationProfile& profile, const CyclicPerm& e, int step) {
  std::int64_t s = 0;
  for (int j = 0; j < 5; ++j) s += profile.t(e.cyclic(j), e.cyclic(j + step), e.cyclic(j + 2 * step));
  return s;
}

std::int64_t complement_residue_sum(const ColoredGraph& g) {
  std::int64_t s = 0;
  for (Color i = 0; i <= static_cast<Color>(g.dimension()); ++i) s += g.residue_count(ColorSet::all_but(i, g.dimension()));
  return s;
}

void require_dimension4(const CyclicPerm& perm) {
  if (perm.dimension() != 4) throw PreconditionError("associated permutations are defined for d = 4 only");
}

}  // namespace

CyclicPerm associated_permutation(const CyclicPerm& perm) {
  require_dimension4(perm);
  return CyclicPerm({perm[0], perm[2], perm[4], perm[1], perm[3]});
}

const std::vector<std::pair<CyclicPerm, CyclicPerm>>& associated_pairs() {
  static const std::vector<std::pair<CyclicPerm, CyclicPerm>> pairs = [] {
    std::vector<std::pair<CyclicPerm, CyclicPerm>> out;
    for (const auto& e : cyclic_permutations(4)) {
      auto a = associated_permutation(e);
      if (e < a) out.emplace_back(e, a);
    }
    return out;
  }();
  return pairs;
}

SurfaceType surface_type(const ColoredGraph& g) {
  require_dimension(g, 2, "surface_type");
  require_connected(g, "surface_type");
  const auto chi = pair_residue_sum(g) - static_cast<std::int64_t>(g.half_order());
  return SurfaceType{is_bipartite(g), chi, HalfInt::from_twice(2 - chi)};
}

bool is_closed_3_manifold(const ColoredGraph& g) {
  require_dimension(g, 3, "is_closed_3_manifold");
  for (Color c = 0; c <= 3; ++c) {
    for (const auto& r : residues_of(g, ColorSet::all_but(c, 3))) {
      if (surface_type(r.graph).euler_characteristic != 2) return false;
    }
  }
  return true;
}

bool is_singular_4_manifold(const ColoredGraph& g) {
  require_dimension(g, 4, "is_singular_4_manifold");
  for (Color c = 0; c <= 4; ++c) {
    for (const auto& r : residues_of(g, ColorSet::all_but(c, 4))) {
      if (!is_closed_3_manifold(r.graph)) return false;
    }
  }
  return true;
}

std::int64_t euler_char_via_genus(const ColoredGraph& g, const CyclicPerm& perm) {
  require_dimension(g, 4, "euler_char_via_genus");
  require_connected(g, "euler_char_via_genus");
  if (!is_singular_4_manifold(g)) throw PreconditionError("euler_char_via_genus needs a singular 4-manifold");
  const HalfInt pair = regular_genus(g, perm) + regular_genus(g, associated_permutation(perm));
  return pair.integer() - static_cast<std::int64_t>(g.half_order()) + complement_residue_sum(g) - 2;
}

bool check_difference_a(const ColoredGraph& g, const CyclicPerm& perm) {
  require_dimension(g, 4, "check_difference_a");
  const HalfInt diff = regular_genus(g, associated_permutation(perm)) - regular_genus(g, perm);
  return diff.twice() == pair_sum(g, perm, 1) - pair_sum(g, perm, 2);
}

bool check_triple_lemma(const ColoredGraph& g) {
  require_dimension(g, 4, "check_triple_lemma");
  const auto p = static_cast<std::int64_t>(g.half_order());
  for (Color r = 0; r <= 4; ++r) {
    for (Color s = r + 1; s <= 4; ++s) {
      for (Color t = s + 1; t <= 4; ++t) {
        const std::int64_t lhs = 2 * static_cast<std::int64_t>(g.residue_count({r, s, t}));
        const std::int64_t rhs = std::int64_t{g.residue_count({r, s})} + g.residue_count({r, t}) +
                                 g.residue_count({s, t}) - p;
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

bool check_difference_b(const ColoredGraph& g, const CyclicPerm& perm) {
  require_dimension(g, 4, "check_difference_b");
  require_connected(g, "check_difference_b");
  if (!is_singular_4_manifold(g)) throw PreconditionError("check_difference_b needs a singular 4-manifold");
  const HalfInt diff = regular_genus(g, associated_permutation(perm)) - regular_genus(g, perm);
  const bool identity = diff == HalfInt(triple_sum(g, perm, 1) - triple_sum(g, perm, 2));
  return identity && check_triple_lemma(g);
}

CorollaryCheck check_corollary_12rho(const ColoredGraph& g) {
  require_dimension(g, 4, "check_corollary_12rho");
  CorollaryCheck out;
  out.holds_left = g_degree_definition(g) == 12 * regular_genus_min(g).genus;
  out.holds_right = std::all_of(cyclic_permutations(4).begin(), cyclic_permutations(4).end(),
                                [&](const CyclicPerm& e) { return pair_sum(g, e, 1) == pair_sum(g, e, 2); });
  return out;
}

std::int64_t residue_degree_sum(const ColoredGraph& g) {
  require_dimension(g, 4, "residue_degree_sum");
  std::int64_t total = 0;
  for (Color i = 0; i <= 4; ++i) {
    for (const auto& r : residues_of(g, ColorSet::all_but(i, 4))) total += g_degree_formula(r.graph).integer();
  }
  return total;
}

bool residue_degree_identity(const ColoredGraph& g) {
  require_dimension(g, 4, "residue_degree_identity");
  require_connected(g, "residue_degree_identity");
  const auto p = static_cast<std::int64_t>(g.half_order());
  const std::int64_t residues = residue_degree_sum(g);
  const HalfInt expected(3 * (p + 4 - complement_residue_sum(g)) + residues);
  return g_degree_definition(g) == expected && residues % 3 == 0;
}

CrystallizationProfile crystallization_profile(const ColoredGraph& g, int m) {
  require_dimension(g, 4, "crystallization_profile");
  if (m < 0) throw PreconditionError("rank of the fundamental group must be non-negative");
  for (Color i = 0; i <= 4; ++i) {
    if (g.residue_count(ColorSet::all_but(i, 4)) != 1) {
      throw PreconditionError("not a crystallization: the residue missing color " + std::to_string(i) +
                              " is disconnected");
    }
  }
  if (!is_singular_4_manifold(g)) throw PreconditionError("not a crystallization: some vertex link is not a 3-manifold");

  CrystallizationProfile out;
  out.m = m;
  out.p = static_cast<std::int64_t>(g.half_order());
  out.euler_characteristic = euler_characteristic_complex(g);
  for (Color a = 0; a <= 4; ++a) {
    for (Color b = a + 1; b <= 4; ++b) {
      for (Color c = b + 1; c <= 4; ++c) {
        ColorSet triple{a, b, c};
        const std::int64_t count = g.residue_count(triple);
        const std::int64_t t = count - 1 - m;
        if (t < 0) {
          throw InvariantViolation("t_{" + triple.label() + "} = " + std::to_string(t) +
                                   " is negative: rank m = " + std::to_string(m) + " is inconsistent with the graph");
        }
        out.g_triples[triple] = count;
        out.t_triples[triple] = t;
        out.q += t;
      }
    }
  }
  out.p_bar = 3 * out.euler_characteristic + 5 * (2 * m - 1);
  if (out.p != out.p_bar + out.q) {
    throw InvariantViolation("half order p = " + std::to_string(out.p) + " differs from 3χ + 5(2m-1) + q = " +
                             std::to_string(out.p_bar + out.q));
  }
  return out;
}

std::string to_string(CrystallizationKind kind) {
  switch (kind) {
    case CrystallizationKind::semi_simple:
      return "semi_simple";
    case CrystallizationKind::weak_semi_simple:
      return "weak_semi_simple";
    case CrystallizationKind::neither:
      return "neither";
  }
  return "unknown";
}

ClassificationResult classify_crystallization(const CrystallizationProfile& profile, const ColoredGraph& g) {
  require_dimension(g, 4, "classify_crystallization");
  const auto& perms = cyclic_permutations(4);

  ClassificationResult out;
  for (const auto& e : perms) {
    bool vanishing = true;
    for (int i = 0; i < 5 && vanishing; ++i) vanishing = profile.t(e.cyclic(i), e.cyclic(i + 1), e.cyclic(i + 2)) == 0;
    if (vanishing) {
      out.witness = e;
      break;
    }
  }
  const bool weak = out.witness.has_value();
  const bool semi = profile.q == 0;

  bool difference_attains_q = false;
  for (const auto& e : perms) {
    const HalfInt diff = regular_genus(g, associated_permutation(e)) - regular_genus(g, e);
    if (diff == HalfInt(profile.q)) difference_attains_q = true;
  }
  const bool genus_minimal =
      regular_genus_min(g).genus == HalfInt(2 * profile.euler_characteristic + 5 * profile.m - 4);

  if (weak != difference_attains_q || weak != genus_minimal) {
    throw InvariantViolation("weak semi-simple characterizations disagree: t-vanishing=" + std::to_string(weak) +
                             ", difference=q " + std::to_string(difference_attains_q) + ", genus bound attained " +
                             std::to_string(genus_minimal));
  }
  if (profile.q <= 2 && !weak) throw InvariantViolation("q <= 2 but no weak semi-simple witness exists");

  out.satisfies_12rho = check_corollary_12rho(g).holds_left;
  if (semi != (weak && out.satisfies_12rho)) {
    throw InvariantViolation("semi-simple is not the intersection of weak semi-simple and ω_G = 12ρ");
  }
  out.kind = semi ? CrystallizationKind::semi_simple
                  : (weak ? CrystallizationKind::weak_semi_simple : CrystallizationKind::neither);
  return out;
}

std::vector<NamedCheck> crystallization_identities(const CrystallizationProfile& profile, const ColoredGraph& g) {
  require_dimension(g, 4, "crystallization_identities");
  const std::int64_t p = profile.p;
  const std::int64_t q = profile.q;
  const std::int64_t m = profile.m;
  const std::int64_t chi = profile.euler_characteristic;
  const std::int64_t base = 2 * chi + 5 * m - 4;

  bool difference = true, skip_genus = true, consecutive_genus = true, pair_bounds = true, single_bounds = true;
  for (const auto& [first, second] : associated_pairs()) {
    CyclicPerm lo = first, hi = second;
    HalfInt rho_lo = regular_genus(g, lo), rho_hi = regular_genus(g, hi);
    if (rho_hi < rho_lo) {
      std::swap(lo, hi);
      std::swap(rho_lo, rho_hi);
    }
    // hi is the associated permutation of lo, so hi's consecutive triples are
    // lo's skip triples.
    const std::int64_t skip = t_sum(profile, lo, 2);
    const std::int64_t consecutive = t_sum(profile, lo, 1);
    difference = difference && rho_hi - rho_lo == HalfInt(q - 2 * skip) && rho_hi - rho_lo <= HalfInt(q);
    skip_genus = skip_genus && rho_lo == HalfInt(base + skip);
    consecutive_genus = consecutive_genus && rho_hi == HalfInt(base + consecutive);

    const std::int64_t lo2 = rho_lo.twice(), hi2 = rho_hi.twice();  // 2ρ, always integral
    pair_bounds = pair_bounds && lo2 - p + 3 <= chi && chi <= hi2 - p + 3 &&
                  8 + lo2 - 10 * m - q <= 4 * chi && 4 * chi <= 8 + hi2 - 10 * m - q;
    single_bounds = single_bounds && lo2 - p + 3 <= chi && chi <= lo2 - p + q + 3 &&
                    8 + lo2 - 10 * m - q <= 4 * chi && 4 * chi <= 8 + lo2 - 10 * m;
  }

  const bool residue_degrees = residue_degree_sum(g) == 3 * (5 * (chi + 2 * m - 2) + q);
  return {
      {"half_order_decomposition", p == profile.p_bar + q},
      {"genus_difference_bound", difference},
      {"genus_from_skip_triples", skip_genus},
      {"genus_from_consecutive_triples", consecutive_genus},
      {"euler_bounds_pair", pair_bounds},
      {"euler_bounds_single", single_bounds},
      {"residue_degree_sum", residue_degrees},
  };
}

}  // namespace gemcalc
