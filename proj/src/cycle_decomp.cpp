#include "gemcalc/cycle_decomp.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <set>

#include "gemcalc/exact_cover.hpp"

namespace gemcalc {

namespace {

std::size_t factorial(int k) {
  std::size_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

// Index of the unordered pair {a, b} of vertices of K_n.
std::size_t edge_index(int n, Color a, Color b) {
  if (a > b) std::swap(a, b);
  // Pairs (0,1),(0,2),...,(0,n-1),(1,2),...
  const auto row = static_cast<std::size_t>(a);
  const auto un = static_cast<std::size_t>(n);
  return row * un - row * (row + 1) / 2 + (b - a - 1);
}

std::vector<std::size_t> cycle_edges(int n, const HamCycle& cycle) {
  std::vector<std::size_t> out;
  out.reserve(cycle.size());
  for (auto [a, b] : cycle.edges()) out.push_back(edge_index(n, a, b));
  return out;
}

// Every set of `size` cycles (indices into `cycles`, ascending) covering each
// edge of K_n exactly `multiplicity` times.
std::vector<std::vector<std::size_t>> all_classes(int n, const std::vector<HamCycle>& cycles, std::size_t size,
                                                  int multiplicity) {
  const std::size_t edge_count = static_cast<std::size_t>(n * (n - 1) / 2);
  std::vector<std::vector<std::size_t>> edges;
  edges.reserve(cycles.size());
  for (const auto& c : cycles) edges.push_back(cycle_edges(n, c));

  std::vector<std::vector<std::size_t>> found;
  std::vector<int> load(edge_count, 0);
  std::vector<std::size_t> picked;

  auto fits = [&](std::size_t i) {
    return std::all_of(edges[i].begin(), edges[i].end(), [&](std::size_t e) { return load[e] < multiplicity; });
  };
  auto apply = [&](std::size_t i, int delta) {
    for (std::size_t e : edges[i]) load[e] += delta;
  };

  // Recursive descent; the lowest-index cycle of a class comes first.
  auto descend = [&](auto&& self, std::size_t from) -> void {
    if (picked.size() == size) {
      found.push_back(picked);
      return;
    }
    for (std::size_t i = from; i < cycles.size(); ++i) {
      if (!fits(i)) continue;
      apply(i, +1);
      picked.push_back(i);
      self(self, i + 1);
      picked.pop_back();
      apply(i, -1);
    }
  };
  descend(descend, 0);
  return found;
}

PermPartition search_partition(int n) {
  const auto& cycles = cyclic_permutations(n - 1);
  DecompositionClass shape{n, {}};
  auto options = all_classes(n, cycles, shape.expected_size(), shape.multiplicity());

  ExactCover problem(cycles.size());
  for (const auto& option : options) problem.add_option(option);
  auto solution = problem.solve_first();
  if (!solution) throw InvariantViolation("no Hamiltonian cycle partition found for n = " + std::to_string(n));

  PermPartition partition{n, {}};
  for (std::size_t k : *solution) {
    DecompositionClass c{n, {}};
    for (std::size_t i : options[k]) c.cycles.push_back(cycles[i]);
    partition.classes.push_back(std::move(c));
  }
  std::sort(partition.classes.begin(), partition.classes.end(),
            [](const auto& a, const auto& b) { return a.cycles < b.cycles; });
  return partition;
}

}  // namespace

DecompositionClass walecki_decomposition(int n) {
  if (n < 3 || n % 2 == 0) throw PreconditionError("Walecki decomposition needs odd n >= 3, got " + std::to_string(n));
  if (n > kMaxColors) throw PreconditionError("n = " + std::to_string(n) + " exceeds the supported color count");
  const int m = (n - 1) / 2;
  const int ring = 2 * m;  // Z_{2m}; vertex n-1 is the hub
  auto mod = [ring](int x) { return static_cast<Color>(((x % ring) + ring) % ring); };

  DecompositionClass out{n, {}};
  for (int i = 0; i < m; ++i) {
    std::vector<Color> seq{static_cast<Color>(n - 1), mod(i)};
    for (int k = 1; k <= m; ++k) {
      seq.push_back(mod(i + k));
      if (k < m) seq.push_back(mod(i - k));
    }
    out.cycles.emplace_back(std::move(seq));
  }
  std::sort(out.cycles.begin(), out.cycles.end());
  return out;
}

PermPartition partition_odd(int n) {
  if (n != 3 && n != 5 && n != 7) throw PreconditionError("partition_odd supports n in {3, 5, 7}, got " + std::to_string(n));
  return search_partition(n);
}

PermPartition partition_even(int n) {
  if (n != 4 && n != 6) throw PreconditionError("partition_even supports n in {4, 6}, got " + std::to_string(n));
  return search_partition(n);
}

const PermPartition& canonical_partition(int n) {
  if (n < 3 || n > 7) throw PreconditionError("no canonical partition for n = " + std::to_string(n));
  static std::array<std::once_flag, 8> once;
  static std::array<PermPartition, 8> cache;
  const auto slot = static_cast<std::size_t>(n);
  std::call_once(once[slot], [n, slot] { cache[slot] = n % 2 == 1 ? partition_odd(n) : partition_even(n); });
  return cache[slot];
}

bool validate_class(const DecompositionClass& c) {
  if (c.n < 3 || c.n > kMaxColors) return false;
  if (c.cycles.size() != c.expected_size()) return false;
  std::set<HamCycle> distinct(c.cycles.begin(), c.cycles.end());
  if (distinct.size() != c.cycles.size()) return false;
  std::vector<int> load(static_cast<std::size_t>(c.n * (c.n - 1) / 2), 0);
  for (const auto& cycle : c.cycles) {
    if (cycle.dimension() != c.n - 1) return false;
    for (std::size_t e : cycle_edges(c.n, cycle)) ++load[e];
  }
  return std::all_of(load.begin(), load.end(), [&](int k) { return k == c.multiplicity(); });
}

bool validate_partition(const PermPartition& partition) {
  const int n = partition.n;
  if (n < 3) return false;
  const std::size_t expected = n % 2 == 1 ? factorial(n - 2) : factorial(n - 2) / 2;
  if (partition.classes.size() != expected) return false;
  std::set<HamCycle> seen;
  std::size_t total = 0;
  for (const auto& c : partition.classes) {
    if (c.n != n || !validate_class(c)) return false;
    seen.insert(c.cycles.begin(), c.cycles.end());
    total += c.cycles.size();
  }
  const auto& all = cyclic_permutations(n - 1);
  return total == all.size() && seen.size() == all.size() && std::equal(seen.begin(), seen.end(), all.begin());
}

const DecompositionClass& class_of(const PermPartition& partition, const CyclicPerm& perm) {
  for (const auto& c : partition.classes) {
    if (std::find(c.cycles.begin(), c.cycles.end(), perm) != c.cycles.end()) return c;
  }
  throw InvariantViolation("cycle " + perm.to_string() + " belongs to no class of the partition for n = " +
                           std::to_string(partition.n));
}

nlohmann::ordered_json to_json(const DecompositionClass& c) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& cycle : c.cycles) out.push_back(cycle.entries());
  return out;
}

nlohmann::ordered_json to_json(const PermPartition& partition) {
  nlohmann::ordered_json out;
  out["n"] = partition.n;
  out["multiplicity"] = partition.n % 2 == 1 ? 1 : 2;
  auto classes = nlohmann::ordered_json::array();
  for (const auto& c : partition.classes) classes.push_back(to_json(c));
  out["classes"] = std::move(classes);
  return out;
}

}  // namespace gemcalc
