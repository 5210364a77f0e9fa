#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's counting code: components come from an explicit stack walk,
// bicolored cycles from alternating walks, genera from F - E + V.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "gemcalc/colored_graph.hpp"

namespace oracle {

using gemcalc::Color;
using gemcalc::ColoredGraph;
using gemcalc::ColorSet;
using gemcalc::Vertex;

// Builds a graph from 1-based matchings, the way gem files spell them.
inline ColoredGraph gem(int d, const std::vector<std::vector<Vertex>>& one_based) {
  std::vector<std::vector<Vertex>> m;
  for (const auto& row : one_based) {
    std::vector<Vertex> r;
    for (Vertex v : row) r.push_back(v - 1);
    m.push_back(r);
  }
  return ColoredGraph(d, m);
}

inline ColoredGraph dipole(int d) {
  return gem(d, std::vector<std::vector<Vertex>>(static_cast<std::size_t>(d + 1), {2, 1}));
}

// Colors 0,1,2 pair up 1-2 and 3-4; colors 3,4 pair 1-4 and 2-3.
inline ColoredGraph g4() {
  return gem(4, {{2, 1, 4, 3}, {2, 1, 4, 3}, {2, 1, 4, 3}, {4, 3, 2, 1}, {4, 3, 2, 1}});
}

// K_4 with its three perfect matchings: the hemi-octahedron.
inline ColoredGraph k4_projective_plane() { return gem(2, {{2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}}); }

inline std::size_t components(const ColoredGraph& g, ColorSet colors) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Color c = 0; c <= static_cast<Color>(g.dimension()); ++c) {
        if (!colors.contains(c)) continue;
        Vertex w = g.matching(c)[v];
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

// Cycles of the {r, s}-subgraph, by walking r, s, r, s, ... from each start.
inline std::size_t alternating_cycles(const ColoredGraph& g, Color r, Color s) {
  std::vector<bool> seen(g.order(), false);
  std::size_t cycles = 0;
  for (Vertex start = 0; start < g.order(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    Vertex v = start;
    do {
      seen[v] = true;
      Vertex w = g.matching(r)[v];
      seen[w] = true;
      v = g.matching(s)[w];
    } while (v != start);
  }
  return cycles;
}

// 2ρ for the cyclic order `eps`: faces are the bicolored cycles of
// consecutive colors, so 2 - 2ρ = F - E + V.
inline std::int64_t twice_genus(const ColoredGraph& g, const std::vector<Color>& eps) {
  std::int64_t faces = 0;
  for (std::size_t j = 0; j < eps.size(); ++j) {
    faces += static_cast<std::int64_t>(alternating_cycles(g, eps[j], eps[(j + 1) % eps.size()]));
  }
  const auto p = static_cast<std::int64_t>(g.half_order());
  const std::int64_t edges = static_cast<std::int64_t>(eps.size()) * p;
  const std::int64_t vertices = 2 * p;
  return 2 - (faces - edges + vertices);
}

inline bool bipartite(const ColoredGraph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Color c = 0; c <= static_cast<Color>(g.dimension()); ++c) {
        Vertex w = g.matching(c)[v];
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

// χ = Σ over proper color subsets B of (-1)^(d - |B|) times the number of
// B-residues: an h-residue is a (d-h)-simplex.
inline std::int64_t euler_characteristic(const ColoredGraph& g) {
  const int d = g.dimension();
  std::int64_t chi = 0;
  for (std::uint32_t mask = 0; mask + 1 < (1u << (d + 1)); ++mask) {
    const ColorSet b(mask);
    const int sign = (d - b.size()) % 2 == 0 ? 1 : -1;
    chi += sign * static_cast<std::int64_t>(components(g, b));
  }
  return chi;
}

// Every cyclic order of {0..d} up to rotation and reversal, each written as its
// lexicographically smallest rotation/reflection.
inline std::set<std::vector<Color>> cyclic_orders(int d) {
  std::vector<Color> seq(static_cast<std::size_t>(d + 1));
  std::iota(seq.begin(), seq.end(), Color{0});
  std::set<std::vector<Color>> out;
  do {
    std::vector<Color> best;
    for (int flip = 0; flip < 2; ++flip) {
      std::vector<Color> s = seq;
      if (flip) std::reverse(s.begin(), s.end());
      for (std::size_t r = 0; r < s.size(); ++r) {
        std::rotate(s.begin(), s.begin() + 1, s.end());
        if (best.empty() || s < best) best = s;
      }
    }
    out.insert(best);
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

// A uniformly shuffled pairing, built with the standard library only.
inline std::vector<Vertex> random_pairing(std::mt19937& rng, std::size_t p) {
  std::vector<Vertex> order(2 * p);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Vertex> mu(2 * p);
  for (std::size_t i = 0; i < order.size(); i += 2) {
    mu[order[i]] = order[i + 1];
    mu[order[i + 1]] = order[i];
  }
  return mu;
}

inline ColoredGraph random_graph(std::mt19937& rng, int d, std::size_t p) {
  std::vector<std::vector<Vertex>> m;
  for (int c = 0; c <= d; ++c) m.push_back(random_pairing(rng, p));
  return ColoredGraph(d, m);
}

inline ColoredGraph random_connected(std::mt19937& rng, int d, std::size_t p) {
  while (true) {
    auto g = random_graph(rng, d, p);
    if (components(g, ColorSet::all(d)) == 1) return g;
  }
}

// Every perfect matching of 2p points, via explicit pair lists.
inline void for_each_pairing(std::size_t p, const std::function<void(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> mu(2 * p, 0);
  std::vector<bool> used(2 * p, false);
  std::function<void()> rec = [&] {
    std::size_t a = 0;
    while (a < used.size() && used[a]) ++a;
    if (a == used.size()) {
      visit(mu);
      return;
    }
    used[a] = true;
    for (std::size_t b = a + 1; b < used.size(); ++b) {
      if (used[b]) continue;
      used[b] = true;
      mu[a] = static_cast<Vertex>(b);
      mu[b] = static_cast<Vertex>(a);
      rec();
      used[b] = false;
    }
    used[a] = false;
  };
  rec();
}

// Every labelled (d+1)-tuple of matchings on 2p points, no gauge fixing.
inline void for_each_graph(int d, std::size_t p, const std::function<void(const ColoredGraph&)>& visit) {
  std::vector<std::vector<Vertex>> all;
  for_each_pairing(p, [&](const std::vector<Vertex>& mu) { all.push_back(mu); });
  std::vector<std::size_t> idx(static_cast<std::size_t>(d + 1), 0);
  while (true) {
    std::vector<std::vector<Vertex>> m;
    for (auto i : idx) m.push_back(all[i]);
    visit(ColoredGraph(d, m));
    std::size_t c = 0;
    while (c < idx.size() && ++idx[c] == all.size()) idx[c++] = 0;
    if (c == idx.size()) return;
  }
}

}  // namespace oracle
