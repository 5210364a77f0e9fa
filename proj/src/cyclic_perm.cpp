#include "gemcalc/cyclic_perm.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>

namespace gemcalc {

namespace {
// d = 10 already yields 1.8M permutations.
constexpr int kMaxPermDimension = 10;
}  // namespace

CyclicPerm::CyclicPerm(std::vector<Color> sequence) {
  const auto n = sequence.size();
  if (n < 3) throw PreconditionError("cyclic permutation needs at least 3 colors");
  if (n > static_cast<std::size_t>(kMaxColors)) throw PreconditionError("too many colors for a cyclic permutation");
  std::vector<bool> seen(n, false);
  for (Color c : sequence) {
    if (c >= n || seen[c]) {
      throw PreconditionError("cyclic permutation entries must be a permutation of 0.." + std::to_string(n - 1));
    }
    seen[c] = true;
  }
  auto zero = std::find(sequence.begin(), sequence.end(), Color{0});
  std::rotate(sequence.begin(), zero, sequence.end());
  if (sequence[1] > sequence[n - 1]) std::reverse(sequence.begin() + 1, sequence.end());
  entries_ = std::move(sequence);
}

std::vector<std::pair<Color, Color>> CyclicPerm::edges() const {
  std::vector<std::pair<Color, Color>> out;
  out.reserve(entries_.size());
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    Color a = entries_[j];
    Color b = entries_[(j + 1) % entries_.size()];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  return out;
}

std::string CyclicPerm::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (j > 0) s += ',';
    s += std::to_string(entries_[j]);
  }
  return s + ")";
}

const std::vector<CyclicPerm>& cyclic_permutations(int d) {
  if (d < 2 || d > kMaxPermDimension) {
    throw PreconditionError("cyclic permutations supported for 2 <= d <= " + std::to_string(kMaxPermDimension));
  }
  static std::array<std::once_flag, kMaxPermDimension + 1> once;
  static std::array<std::vector<CyclicPerm>, kMaxPermDimension + 1> cache;
  const auto slot = static_cast<std::size_t>(d);
  std::call_once(once[slot], [d, slot] {
    std::vector<Color> tail(static_cast<std::size_t>(d));
    std::iota(tail.begin(), tail.end(), Color{1});
    std::vector<CyclicPerm> perms;
    do {
      if (tail.front() < tail.back()) {
        std::vector<Color> seq{0};
        seq.insert(seq.end(), tail.begin(), tail.end());
        perms.emplace_back(std::move(seq));
      }
    } while (std::next_permutation(tail.begin(), tail.end()));
    cache[slot] = std::move(perms);
  });
  return cache[slot];
}

std::size_t permutation_index(const CyclicPerm& perm) {
  const auto& all = cyclic_permutations(perm.dimension());
  auto it = std::lower_bound(all.begin(), all.end(), perm);
  return static_cast<std::size_t>(it - all.begin());
}

}  // namespace gemcalc
