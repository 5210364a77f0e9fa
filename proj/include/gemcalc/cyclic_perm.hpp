#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gemcalc/colored_graph.hpp"

namespace gemcalc {

/// A cyclic ordering of {0,...,d}, identified with its rotations and its
/// inverse. Stored canonically: entry 0 is color 0 and entry 1 < entry d.
class CyclicPerm {
 public:
  /// Accepts any rotation or reversal of a permutation of {0,...,d}, d >= 2.
  explicit CyclicPerm(std::vector<Color> sequence);

  int dimension() const { return static_cast<int>(entries_.size()) - 1; }
  std::size_t size() const { return entries_.size(); }
  Color operator[](std::size_t j) const { return entries_[j]; }
  /// Entry at position j taken modulo d+1 (negative j allowed).
  Color cyclic(std::ptrdiff_t j) const {
    auto n = static_cast<std::ptrdiff_t>(entries_.size());
    return entries_[static_cast<std::size_t>(((j % n) + n) % n)];
  }
  const std::vector<Color>& entries() const { return entries_; }

  /// The d+1 unordered pairs {ε_j, ε_{j+1}}, each as (min, max).
  std::vector<std::pair<Color, Color>> edges() const;

  /// "(0,1,2,3,4)"
  std::string to_string() const;

  friend bool operator==(const CyclicPerm&, const CyclicPerm&) = default;
  friend auto operator<=>(const CyclicPerm&, const CyclicPerm&) = default;

 private:
  std::vector<Color> entries_;
};

/// All d!/2 canonical cyclic permutations of {0,...,d} in lexicographic order.
/// The returned reference stays valid for the life of the program.
const std::vector<CyclicPerm>& cyclic_permutations(int d);

/// Position of a canonical permutation within cyclic_permutations(d).
std::size_t permutation_index(const CyclicPerm& perm);

}  // namespace gemcalc
