#pragma once

// Hamiltonian cycles of the complete graph K_n on vertices {0,...,n-1}, and
// partitions of all of them into decomposition classes: for odd n each class
// covers every edge of K_n once, for even n every edge exactly twice.

#include <vector>

#include <json.hpp>

#include "gemcalc/cyclic_perm.hpp"

namespace gemcalc {

/// A Hamiltonian cycle of K_n is a cyclic permutation of {0,...,n-1}.
using HamCycle = CyclicPerm;

struct DecompositionClass {
  int n = 0;
  std::vector<HamCycle> cycles;

  /// 1 for odd n, 2 for even n.
  int multiplicity() const { return n % 2 == 1 ? 1 : 2; }
  /// (n-1)/2 for odd n, n-1 for even n.
  std::size_t expected_size() const {
    return static_cast<std::size_t>(n % 2 == 1 ? (n - 1) / 2 : n - 1);
  }
};

struct PermPartition {
  int n = 0;
  std::vector<DecompositionClass> classes;
};

/// Classical zig-zag construction, rotated about the point n-1. Any odd n >= 3.
DecompositionClass walecki_decomposition(int n);

/// Exact-cover search over all Hamiltonian decompositions; n in {3, 5, 7}.
PermPartition partition_odd(int n);
/// Exact-cover search over all doubly-covering classes; n in {4, 6}.
PermPartition partition_even(int n);
/// Memoized partition_odd / partition_even for n in {3,...,7}.
const PermPartition& canonical_partition(int n);

bool validate_class(const DecompositionClass& c);
/// Every class valid, classes disjoint, union is all (n-1)!/2 cycles, class
/// count (n-2)! for odd n and (n-2)!/2 for even n.
bool validate_partition(const PermPartition& partition);

/// The class containing a canonical cycle; throws InvariantViolation if absent.
const DecompositionClass& class_of(const PermPartition& partition, const CyclicPerm& perm);

nlohmann::ordered_json to_json(const DecompositionClass& c);
nlohmann::ordered_json to_json(const PermPartition& partition);

}  // namespace gemcalc
