#include <doctest.h>

#include "gemcalc/dim4.hpp"
#include "gemcalc/embeddings.hpp"
#include "gemcalc/generator.hpp"
#include "oracles.hpp"

using namespace gemcalc;

namespace {

CyclicPerm perm(std::initializer_list<Color> c) { return CyclicPerm(std::vector<Color>(c)); }

// Residue-χ oracle: every 3-colored residue of every 4-colored residue is a sphere.
bool singular_oracle(const ColoredGraph& g) {
  for (Color i = 0; i <= 4; ++i) {
    for (const auto& r : residues_of(g, ColorSet::all_but(i, 4))) {
      for (Color j = 0; j <= 3; ++j) {
        for (const auto& s : residues_of(r.graph, ColorSet::all_but(j, 3))) {
          if (oracle::euler_characteristic(s.graph) != 2) return false;
        }
      }
    }
  }
  return true;
}

HalfInt rho(const ColoredGraph& g, const CyclicPerm& e) { return HalfInt::from_twice(oracle::twice_genus(g, e.entries())); }

std::vector<ColoredGraph> corpus_d4() {
  std::vector<ColoredGraph> out;
  for (std::size_t p = 1; p <= 3; ++p) {
    enumerate_gems(4, p, true, [&](const ColoredGraph& g) {
      out.push_back(g);
      return true;
    });
  }
  return out;
}

}  // namespace

TEST_CASE("associated permutations") {
  CHECK(associated_permutation(perm({0, 1, 2, 3, 4})) == perm({0, 2, 4, 1, 3}));
  CHECK(associated_permutation(perm({0, 2, 4, 1, 3})) == perm({0, 1, 2, 3, 4}));
  CHECK(associated_pairs().size() == 6);
  std::set<CyclicPerm> seen;
  for (const auto& e : cyclic_permutations(4)) {
    const auto f = associated_permutation(e);
    CHECK(associated_permutation(f) == e);
    CHECK(f != e);
    std::set<std::pair<Color, Color>> edges;
    for (auto x : e.edges()) edges.insert(x);
    for (auto x : f.edges()) CHECK(edges.insert(x).second);
    CHECK(edges.size() == 10);
  }
  for (const auto& [e, f] : associated_pairs()) {
    CHECK(e < f);
    CHECK(seen.insert(e).second);
    CHECK(seen.insert(f).second);
  }
  CHECK_THROWS_AS(associated_permutation(perm({0, 1, 2, 3})), PreconditionError);
}

TEST_CASE("surface types") {
  auto s = surface_type(oracle::dipole(2));
  CHECK(s.orientable);
  CHECK(s.euler_characteristic == 2);
  CHECK(s.genus == HalfInt(0));

  auto rp2 = surface_type(oracle::k4_projective_plane());
  CHECK_FALSE(rp2.orientable);
  CHECK(rp2.euler_characteristic == 1);
  CHECK(rp2.genus == HalfInt::from_twice(1));

  bool torus = false;
  enumerate_gems(2, 3, true, [&](const ColoredGraph& g) {
    if (!oracle::bipartite(g) || oracle::euler_characteristic(g) != 0) return true;
    auto t = surface_type(g);
    CHECK(t.orientable);
    CHECK(t.euler_characteristic == 0);
    CHECK(t.genus == HalfInt(1));
    torus = true;
    return false;
  });
  CHECK(torus);
  CHECK_THROWS_AS(surface_type(oracle::g4()), PreconditionError);
}

TEST_CASE("closed 3-manifolds and singular 4-manifolds") {
  CHECK(is_closed_3_manifold(oracle::dipole(3)));
  CHECK(is_closed_3_manifold(subgraph(oracle::g4(), ColorSet::all_but(0, 4), 0).graph));
  CHECK(is_singular_4_manifold(oracle::dipole(4)));
  CHECK(is_singular_4_manifold(oracle::g4()));

  // A 4-colored graph with a non-spherical residue surface.
  bool found = false;
  enumerate_gems(3, 3, true, [&](const ColoredGraph& g) {
    if (is_closed_3_manifold(g)) return true;
    bool bad = false;
    for (Color j = 0; j <= 3; ++j) {
      for (const auto& r : residues_of(g, ColorSet::all_but(j, 3))) bad = bad || oracle::euler_characteristic(r.graph) != 2;
    }
    CHECK(bad);
    found = true;
    return false;
  });
  CHECK(found);
  CHECK_THROWS_AS(is_closed_3_manifold(oracle::g4()), PreconditionError);

  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    auto g = oracle::random_connected(rng, 4, 1 + i % 4);
    CHECK(is_singular_4_manifold(g) == singular_oracle(g));
  }
}

TEST_CASE("Euler characteristic through genera") {
  CHECK(euler_char_via_genus(oracle::dipole(4), perm({0, 1, 2, 3, 4})) == 2);
  auto g = oracle::g4();
  for (const auto& [e, f] : associated_pairs()) CHECK(euler_char_via_genus(g, e) == 2);
  auto odd = oracle::gem(4, {{2, 1, 4, 3}, {2, 1, 4, 3}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}});
  CHECK_FALSE(is_singular_4_manifold(odd));
  CHECK_THROWS_AS(euler_char_via_genus(odd, perm({0, 1, 2, 3, 4})), PreconditionError);
}

TEST_CASE("genus differences and the triple lemma") {
  for (const auto& e : cyclic_permutations(4)) {
    CHECK(check_difference_a(oracle::dipole(4), e));
    CHECK(check_difference_b(oracle::dipole(4), e));
    CHECK(check_difference_a(oracle::g4(), e));
    CHECK(check_difference_b(oracle::g4(), e));
  }
  auto g = oracle::g4();
  // Direct counts: consecutive triples of (0,1,2,3,4) sum to 6, skip triples to 5.
  CHECK(residue_count(g, {0, 1, 2}) + residue_count(g, {1, 2, 3}) + residue_count(g, {2, 3, 4}) +
            residue_count(g, {3, 4, 0}) + residue_count(g, {4, 0, 1}) ==
        6);
  CHECK(residue_count(g, {0, 1, 3}) == 1);
  CHECK(2 * oracle::components(g, {0, 1, 3}) ==
        oracle::components(g, {0, 1}) + oracle::components(g, {0, 3}) + oracle::components(g, {1, 3}) - 2);
  CHECK(check_triple_lemma(g));
  CHECK(rho(g, perm({0, 2, 4, 1, 3})) - rho(g, perm({0, 1, 2, 3, 4})) == HalfInt(1));
}

TEST_CASE("degree equals 12 rho criterion") {
  auto d = check_corollary_12rho(oracle::dipole(4));
  CHECK(d.holds_left);
  CHECK(d.holds_right);
  auto g = check_corollary_12rho(oracle::g4());
  CHECK_FALSE(g.holds_left);
  CHECK_FALSE(g.holds_right);
}

TEST_CASE("residue degree identity") {
  CHECK(residue_degree_sum(oracle::dipole(4)) == 0);
  CHECK(residue_degree_identity(oracle::dipole(4)));
  auto g = oracle::g4();
  // Residue degrees straight from the genus oracle on each component.
  std::int64_t sum = 0;
  for (Color i = 0; i <= 4; ++i) {
    for (const auto& r : residues_of(g, ColorSet::all_but(i, 4))) {
      for (const auto& e : cyclic_permutations(3)) sum += oracle::twice_genus(r.graph, e.entries());
    }
  }
  CHECK(sum == 2 * 3);
  CHECK(residue_degree_sum(g) == 3);
  CHECK(residue_degree_identity(g));
}

TEST_CASE("crystallization profiles") {
  auto dip = crystallization_profile(oracle::dipole(4), 0);
  CHECK(dip.q == 0);
  CHECK(dip.p_bar == 1);
  CHECK(dip.p == 1);
  auto kind = classify_crystallization(dip, oracle::dipole(4));
  CHECK(kind.kind == CrystallizationKind::semi_simple);
  CHECK(kind.witness.has_value());
  CHECK(kind.satisfies_12rho);

  // G4: g_012 = 2 and every other triple is 1, so q = 1 and p = 1 + 1.
  auto g = oracle::g4();
  auto prof = crystallization_profile(g, 0);
  CHECK(prof.g_triples.at(ColorSet{0, 1, 2}) == 2);
  for (const auto& [set, count] : prof.g_triples) {
    CHECK(count == static_cast<std::int64_t>(oracle::components(g, set)));
    if (set != ColorSet{0, 1, 2}) CHECK(count == 1);
  }
  CHECK(prof.t(0, 1, 2) == 1);
  CHECK(prof.q == 1);
  CHECK(prof.euler_characteristic == 2);
  CHECK(prof.p_bar == 1);
  CHECK(prof.p == prof.p_bar + prof.q);
  auto c = classify_crystallization(prof, g);
  CHECK(c.kind == CrystallizationKind::weak_semi_simple);
  REQUIRE(c.witness);
  for (int j = 0; j < 5; ++j) CHECK(prof.t(c.witness->cyclic(j), c.witness->cyclic(j + 1), c.witness->cyclic(j + 2)) == 0);
  CHECK_FALSE(c.satisfies_12rho);
  for (const auto& check : crystallization_identities(prof, g)) CHECK_MESSAGE(check.holds, check.name);

  CHECK_THROWS_AS(crystallization_profile(g, 1), InvariantViolation);
  auto odd = oracle::gem(4, {{2, 1, 4, 3}, {2, 1, 4, 3}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}});
  CHECK_THROWS_AS(crystallization_profile(odd, 0), PreconditionError);
  CHECK(to_string(CrystallizationKind::weak_semi_simple) == "weak_semi_simple");
}

TEST_CASE("property: dimension-4 identities over the exhaustive corpus") {
  std::size_t crystals = 0, singular = 0;
  for (const auto& g : corpus_d4()) {
    const auto p = static_cast<std::int64_t>(g.half_order());
    const HalfInt omega = g_degree_definition(g);
    std::int64_t sum_g = 0;
    for (Color r = 0; r <= 4; ++r) {
      for (Color s = r + 1; s <= 4; ++s) sum_g += static_cast<std::int64_t>(oracle::components(g, {r, s}));
    }
    for (const auto& [e, f] : associated_pairs()) {
      const HalfInt pair = rho(g, e) + rho(g, f);
      REQUIRE(omega == 6 * pair);
      CHECK(pair.twice() == 4 + 6 * p - sum_g);
    }
    for (const auto& e : cyclic_permutations(4)) CHECK(check_difference_a(g, e));
    auto cor = check_corollary_12rho(g);
    CHECK(cor.holds_left == cor.holds_right);
    CHECK(residue_degree_identity(g));
    if (reduced_g_degree(g) % 2 != 0) {
      CHECK_FALSE(oracle::bipartite(g));
      CHECK_FALSE(is_singular_4_manifold(g));
    }
    if (!is_singular_4_manifold(g)) continue;
    ++singular;
    CHECK(omega.twice() % 12 == 0);
    CHECK(check_triple_lemma(g));
    for (const auto& e : cyclic_permutations(4)) {
      CHECK(check_difference_b(g, e));
      CHECK(euler_char_via_genus(g, e) == oracle::euler_characteristic(g));
    }
    bool connected_hats = true;
    for (Color i = 0; i <= 4; ++i) connected_hats = connected_hats && oracle::components(g, ColorSet::all_but(i, 4)) == 1;
    if (!connected_hats) continue;
    ++crystals;
    auto prof = crystallization_profile(g, 0);
    auto c = classify_crystallization(prof, g);
    if (prof.q <= 2) CHECK(c.kind != CrystallizationKind::neither);
    CHECK((c.kind == CrystallizationKind::semi_simple) == (prof.q == 0));
    for (const auto& check : crystallization_identities(prof, g)) CHECK_MESSAGE(check.holds, check.name);
  }
  CHECK(singular > 0);
  CHECK(crystals > 0);
}
