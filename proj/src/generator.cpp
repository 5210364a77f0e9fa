#include "gemcalc/generator.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "gemcalc/dim4.hpp"
#include "gemcalc/embeddings.hpp"

namespace gemcalc {

namespace {

constexpr std::size_t kRejectionBudgetPerSample = 10'000;
constexpr std::size_t kOddSearchDrawsPerOrder = 20'000;

bool accepted(const ColoredGraph& g, const GenSpec& spec) {
  if (spec.connected_only && !is_connected(g)) return false;
  if (spec.bipartite_only && !is_bipartite(g)) return false;
  if (spec.nonbipartite_only && is_bipartite(g)) return false;
  return true;
}

template <class Range>
void shuffle(std::mt19937_64& rng, Range& items) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[uniform_below(rng, i)]);
}

ColoredGraph draw(std::mt19937_64& rng, const GenSpec& spec) {
  std::vector<std::vector<Vertex>> matchings;
  matchings.reserve(static_cast<std::size_t>(spec.d + 1));
  if (!spec.bipartite_only) {
    for (int c = 0; c <= spec.d; ++c) matchings.push_back(random_matching(rng, spec.p));
    return ColoredGraph(spec.d, std::move(matchings));
  }
  // Black vertices sit at a shuffled half of the labels; every color is a
  // uniform bijection from black to white.
  std::vector<Vertex> labels(2 * spec.p);
  std::iota(labels.begin(), labels.end(), Vertex{0});
  shuffle(rng, labels);
  std::vector<Vertex> white(spec.p);
  for (int c = 0; c <= spec.d; ++c) {
    std::iota(white.begin(), white.end(), static_cast<Vertex>(spec.p));
    shuffle(rng, white);
    std::vector<Vertex> mu(2 * spec.p);
    for (std::size_t b = 0; b < spec.p; ++b) {
      Vertex x = labels[b], y = labels[white[b]];
      mu[x] = y;
      mu[y] = x;
    }
    matchings.push_back(std::move(mu));
  }
  return ColoredGraph(spec.d, std::move(matchings));
}

void build_matchings(std::vector<Vertex>& current, std::vector<bool>& used,
                     std::vector<std::vector<Vertex>>& out) {
  auto first = std::find(used.begin(), used.end(), false);
  if (first == used.end()) {
    out.push_back(current);
    return;
  }
  const auto a = static_cast<Vertex>(first - used.begin());
  used[a] = true;
  for (Vertex b = a + 1; b < used.size(); ++b) {
    if (used[b]) continue;
    used[b] = true;
    current[a] = b;
    current[b] = a;
    build_matchings(current, used, out);
    used[b] = false;
  }
  used[a] = false;
}

std::vector<Vertex> gauge_matching(std::size_t p) {
  std::vector<Vertex> mu(2 * p);
  for (Vertex v = 0; v < mu.size(); ++v) mu[v] = v ^ 1u;
  return mu;
}

}  // namespace

void validate(const GenSpec& spec) {
  if (spec.d < 2 || spec.d > kMaxDimension) throw PreconditionError("generator needs 2 <= d <= " + std::to_string(kMaxDimension));
  if (spec.p < 1) throw PreconditionError("generator needs p >= 1");
  if (spec.count < 1) throw PreconditionError("generator needs count >= 1");
  if (spec.bipartite_only && spec.nonbipartite_only) throw PreconditionError("bipartite and non-bipartite filters are exclusive");
}

ColoredGraph dipole(int d) {
  if (d < 0 || d > kMaxDimension) throw PreconditionError("dipole dimension out of range");
  return ColoredGraph(d, std::vector<std::vector<Vertex>>(static_cast<std::size_t>(d + 1), {1, 0}));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("uniform_below needs a positive bound");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::vector<Vertex> random_matching(std::mt19937_64& rng, std::size_t p) {
  std::vector<Vertex> order(2 * p);
  std::iota(order.begin(), order.end(), Vertex{0});
  shuffle(rng, order);
  std::vector<Vertex> mu(2 * p);
  for (std::size_t i = 0; i < order.size(); i += 2) {
    mu[order[i]] = order[i + 1];
    mu[order[i + 1]] = order[i];
  }
  return mu;
}

std::vector<ColoredGraph> random_gem(const GenSpec& spec) {
  validate(spec);
  std::mt19937_64 rng(spec.seed);
  std::vector<ColoredGraph> out;
  out.reserve(spec.count);
  const std::size_t budget = kRejectionBudgetPerSample * spec.count;
  std::size_t attempts = 0;
  while (out.size() < spec.count) {
    if (attempts++ == budget) {
      throw PreconditionError("filters rejected " + std::to_string(budget) + " draws for d = " + std::to_string(spec.d) +
                              ", p = " + std::to_string(spec.p) + "; only " + std::to_string(out.size()) +
                              " graphs accepted");
    }
    auto g = draw(rng, spec);
    if (accepted(g, spec)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<std::vector<Vertex>> perfect_matchings(std::size_t p) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> current(2 * p);
  std::vector<bool> used(2 * p, false);
  build_matchings(current, used, out);
  return out;
}

std::uint64_t enumeration_size(int d, std::size_t p) {
  std::uint64_t per_color = 1;
  for (std::uint64_t k = 2 * p - 1; k > 1; k -= 2) per_color *= k;
  std::uint64_t total = 1;
  for (int c = 0; c < d; ++c) {
    if (total > std::numeric_limits<std::uint64_t>::max() / per_color) return std::numeric_limits<std::uint64_t>::max();
    total *= per_color;
  }
  return total;
}

void enumerate_gems(int d, std::size_t p, bool connected_only, const GemVisitor& visit) {
  enumerate_gems_shard(d, p, connected_only, 0, 1, visit);
}

void enumerate_gems_shard(int d, std::size_t p, bool connected_only, std::size_t shard, std::size_t shard_count,
                          const GemVisitor& visit) {
  if (d < 1 || d > kMaxDimension) throw PreconditionError("enumeration dimension out of range");
  if (p < 1) throw PreconditionError("enumeration needs p >= 1");
  if (shard_count == 0 || shard >= shard_count) throw PreconditionError("invalid enumeration shard");
  if (enumeration_size(d, p) > kEnumerationBudget) {
    throw PreconditionError("exhaustive enumeration of d = " + std::to_string(d) + ", p = " + std::to_string(p) +
                            " exceeds the budget of " + std::to_string(kEnumerationBudget) + " tuples");
  }
  const auto all = perfect_matchings(p);
  const std::size_t k = all.size();
  const std::size_t begin = k * shard / shard_count;
  const std::size_t end = k * (shard + 1) / shard_count;

  // Odometer over colors 1..d; color 1 restricted to [begin, end).
  std::vector<std::size_t> index(static_cast<std::size_t>(d + 1), 0);
  if (begin == end) return;
  index[1] = begin;
  const auto gauge = gauge_matching(p);
  while (true) {
    std::vector<std::vector<Vertex>> matchings;
    matchings.reserve(index.size());
    matchings.push_back(gauge);
    for (std::size_t c = 1; c < index.size(); ++c) matchings.push_back(all[index[c]]);
    ColoredGraph g(d, std::move(matchings));
    if ((!connected_only || is_connected(g)) && !visit(g)) return;

    // Last color varies fastest.
    std::size_t c = index.size() - 1;
    while (true) {
      ++index[c];
      const std::size_t limit = c == 1 ? end : k;
      if (index[c] < limit) break;
      if (c == 1) return;
      index[c] = 0;
      --c;
    }
  }
}

ColoredGraph search_rp2() {
  for (std::size_t p = 1;; ++p) {
    std::optional<ColoredGraph> found;
    enumerate_gems(2, p, true, [&](const ColoredGraph& g) {
      if (is_bipartite(g)) return true;
      if (surface_type(g).euler_characteristic != 1) return true;
      found = g;
      return false;
    });
    if (found) return *found;
  }
}

std::optional<ColoredGraph> search_odd_reduced(int d, std::size_t max_p) {
  if (d < 4 || d % 2 != 0) throw PreconditionError("odd reduced degree search needs even d >= 4");
  auto odd = [](const ColoredGraph& g) { return reduced_g_degree(g) % 2 != 0; };
  for (std::size_t p = 1; p <= max_p; ++p) {
    std::optional<ColoredGraph> found;
    if (enumeration_size(d, p) <= kEnumerationBudget) {
      enumerate_gems(d, p, true, [&](const ColoredGraph& g) {
        if (!odd(g)) return true;
        found = g;
        return false;
      });
    } else {
      GenSpec spec{d, p, true, false, false, 0x6f64640000000000ull + p, 1};
      std::mt19937_64 rng(spec.seed);
      for (std::size_t i = 0; i < kOddSearchDrawsPerOrder && !found; ++i) {
        auto g = draw(rng, spec);
        if (is_connected(g) && odd(g)) found = std::move(g);
      }
    }
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace gemcalc
