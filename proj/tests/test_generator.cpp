#include <doctest.h>

#include "gemcalc/dim4.hpp"
#include "gemcalc/embeddings.hpp"
#include "gemcalc/generator.hpp"
#include "oracles.hpp"

using namespace gemcalc;

namespace {

std::size_t count_enumerated(int d, std::size_t p, bool connected_only) {
  std::size_t n = 0;
  enumerate_gems(d, p, connected_only, [&](const ColoredGraph&) {
    ++n;
    return true;
  });
  return n;
}

}  // namespace

TEST_CASE("dipoles") {
  for (int d = 2; d <= 6; ++d) {
    auto g = dipole(d);
    CHECK(g == oracle::dipole(d));
    CHECK(is_bipartite(g));
    for (std::uint32_t mask = 1; mask <= ColorSet::all(d).mask(); ++mask) CHECK(residue_count(g, ColorSet(mask)) == 1);
    CHECK(g_degree_definition(g) == HalfInt(0));
  }
  CHECK(euler_characteristic_complex(dipole(2)) == 2);
}

TEST_CASE("bounded uniform draws") {
  std::mt19937_64 rng(1);
  std::vector<int> hist(7, 0);
  for (int i = 0; i < 7000; ++i) {
    auto x = uniform_below(rng, 7);
    REQUIRE(x < 7);
    ++hist[x];
  }
  for (int h : hist) CHECK(h > 800);
  CHECK_THROWS_AS(uniform_below(rng, 0), PreconditionError);
  auto mu = random_matching(rng, 5);
  for (Vertex v = 0; v < 10; ++v) {
    CHECK(mu[mu[v]] == v);
    CHECK(mu[v] != v);
  }
}

TEST_CASE("random gems are reproducible and respect filters") {
  GenSpec spec;
  spec.d = 4;
  spec.p = 4;
  spec.seed = 42;
  spec.count = 100;
  auto a = random_gem(spec), b = random_gem(spec);
  REQUIRE(a.size() == 100);
  CHECK(a == b);
  for (const auto& g : a) CHECK(oracle::components(g, ColorSet::all(4)) == 1);
  spec.seed = 43;
  CHECK(random_gem(spec) != a);

  spec.p = 1;
  spec.count = 3;
  for (const auto& g : random_gem(spec)) CHECK(g == dipole(4));

  spec.p = 3;
  spec.count = 50;
  spec.bipartite_only = true;
  for (const auto& g : random_gem(spec)) CHECK(oracle::bipartite(g));
  spec.bipartite_only = false;
  spec.nonbipartite_only = true;
  for (const auto& g : random_gem(spec)) CHECK_FALSE(oracle::bipartite(g));

  // Order 2 gems are all bipartite, so this filter can never be met.
  spec.p = 1;
  spec.count = 1;
  CHECK_THROWS_AS(random_gem(spec), PreconditionError);

  spec = GenSpec{};
  spec.p = 0;
  CHECK_THROWS_AS(random_gem(spec), PreconditionError);
  spec.p = 1;
  spec.d = 1;
  CHECK_THROWS_AS(random_gem(spec), PreconditionError);
  spec.d = 4;
  spec.count = 0;
  CHECK_THROWS_AS(random_gem(spec), PreconditionError);
}

TEST_CASE("the bipartite sampler reaches every labelled bipartite gem at p = 2") {
  // d = 2, p = 2: count distinct bipartite connected graphs reached vs brute force.
  std::set<std::string> brute, sampled;
  oracle::for_each_graph(2, 2, [&](const ColoredGraph& g) {
    if (oracle::bipartite(g) && oracle::components(g, ColorSet::all(2)) == 1) brute.insert(serialize_gem(g));
  });
  GenSpec spec;
  spec.d = 2;
  spec.p = 2;
  spec.bipartite_only = true;
  spec.count = 2000;
  for (const auto& g : random_gem(spec)) sampled.insert(serialize_gem(g));
  CHECK(sampled == brute);
}

TEST_CASE("perfect matchings") {
  CHECK(perfect_matchings(1).size() == 1);
  CHECK(perfect_matchings(2).size() == 3);
  CHECK(perfect_matchings(3).size() == 15);
  CHECK(perfect_matchings(4).size() == 105);
  auto all = perfect_matchings(3);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::set<std::vector<Vertex>>(all.begin(), all.end()).size() == 15);
  CHECK(enumeration_size(4, 2) == 81);
  CHECK(enumeration_size(4, 3) == 50625);
}

TEST_CASE("enumeration counts match the brute-force fixture") {
  // Connected counts from an independent brute force over gauge-fixed tuples.
  CHECK(count_enumerated(4, 1, true) == 1);
  CHECK(count_enumerated(4, 2, false) == 81);
  CHECK(count_enumerated(4, 2, true) == 80);
  CHECK(count_enumerated(4, 3, true) == 50384);
  CHECK(count_enumerated(2, 2, true) == 8);
  CHECK(count_enumerated(2, 3, true) == 200);
  CHECK(count_enumerated(3, 2, true) == 26);

  std::vector<ColoredGraph> first;
  enumerate_gems(4, 2, true, [&](const ColoredGraph& g) {
    first.push_back(g);
    return first.size() < 5;
  });
  CHECK(first.size() == 5);
  for (const auto& g : first) {
    for (Vertex v = 0; v < 4; ++v) CHECK(g.neighbor(0, v) == (v ^ 1u));
  }
  CHECK_THROWS_AS(enumerate_gems(4, 5, true, [](const ColoredGraph&) { return true; }), PreconditionError);
}

TEST_CASE("shards concatenate to the full stream") {
  std::vector<std::string> full, joined;
  enumerate_gems(3, 3, true, [&](const ColoredGraph& g) {
    full.push_back(serialize_gem(g));
    return true;
  });
  for (std::size_t s = 0; s < 4; ++s) {
    enumerate_gems_shard(3, 3, true, s, 4, [&](const ColoredGraph& g) {
      joined.push_back(serialize_gem(g));
      return true;
    });
  }
  CHECK(full == joined);
  CHECK_THROWS_AS(enumerate_gems_shard(3, 3, true, 4, 4, [](const ColoredGraph&) { return true; }), PreconditionError);
}

TEST_CASE("gauge fixing loses no invariant values") {
  // Every labelled d = 3, p = 2 graph has the same invariant profile as some
  // gauge-fixed one.
  auto profile = [](const ColoredGraph& g) {
    std::vector<std::int64_t> v;
    for (std::uint32_t mask = 0; mask < 16; ++mask) v.push_back(oracle::components(g, ColorSet(mask)));
    v.push_back(oracle::bipartite(g));
    return v;
  };
  std::set<std::vector<std::int64_t>> gauged, all;
  enumerate_gems(3, 2, false, [&](const ColoredGraph& g) {
    gauged.insert(profile(g));
    return true;
  });
  oracle::for_each_graph(3, 2, [&](const ColoredGraph& g) { all.insert(profile(g)); });
  CHECK(gauged == all);
}

TEST_CASE("the smallest projective plane gem") {
  // Brute force without gauge: nothing at order 2, K_4 at order 4.
  bool order2 = false, order4 = false;
  oracle::for_each_graph(2, 1, [&](const ColoredGraph& g) { order2 = order2 || oracle::euler_characteristic(g) == 1; });
  oracle::for_each_graph(2, 2, [&](const ColoredGraph& g) {
    if (oracle::components(g, ColorSet::all(2)) == 1 && !oracle::bipartite(g) && oracle::euler_characteristic(g) == 1) {
      order4 = true;
    }
  });
  CHECK_FALSE(order2);
  CHECK(order4);

  auto g = search_rp2();
  CHECK(g.order() == 4);
  CHECK_FALSE(oracle::bipartite(g));
  CHECK(oracle::euler_characteristic(g) == 1);
  CHECK(surface_type(g).genus == HalfInt::from_twice(1));
  CHECK(g_degree_definition(g) == HalfInt::from_twice(1));
  for (Color r = 0; r < 3; ++r) {
    for (Color s = r + 1; s < 3; ++s) CHECK(oracle::alternating_cycles(g, r, s) == 1);
  }
}

TEST_CASE("odd reduced degree witnesses") {
  CHECK_FALSE(search_odd_reduced(4, 1).has_value());
  auto w = search_odd_reduced(4, 8);
  REQUIRE(w);
  CHECK(w->half_order() == 2);
  std::int64_t twice_omega = 0;
  for (const auto& e : cyclic_permutations(4)) twice_omega += oracle::twice_genus(*w, e.entries());
  CHECK(twice_omega % 12 == 6);  // ω/3 odd
  CHECK(reduced_g_degree(*w) == 3);
  CHECK_FALSE(oracle::bipartite(*w));
  CHECK_FALSE(is_singular_4_manifold(*w));

  auto w6 = search_odd_reduced(6, 3);
  REQUIRE(w6);
  CHECK(reduced_g_degree(*w6) % 2 == 1);
  CHECK_FALSE(oracle::bipartite(*w6));
  CHECK_THROWS_AS(search_odd_reduced(5, 3), PreconditionError);
}
