#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace gemcalc {

// Knuth's Algorithm X over a dancing-links matrix. Every item is primary.
// Column choice is minimum remaining values, ties broken by lowest item index;
// options are tried in insertion order, so the first solution is deterministic.
class ExactCover {
 public:
  explicit ExactCover(std::size_t item_count);

  /// Items must be distinct and in range. Returns the option index.
  std::size_t add_option(std::span<const std::size_t> items);

  /// First exact cover found, as option indices in ascending order.
  std::optional<std::vector<std::size_t>> solve_first();

  std::size_t item_count() const { return item_count_; }
  std::size_t option_count() const { return option_count_; }

 private:
  struct Node {
    std::size_t left, right, up, down, column, option;
  };

  void cover(std::size_t column);
  void uncover(std::size_t column);
  bool search(std::vector<std::size_t>& chosen);

  std::size_t item_count_;
  std::size_t option_count_ = 0;
  std::vector<Node> nodes_;         // 0 = root, 1..items = column headers
  std::vector<std::size_t> sizes_;  // per column header
  std::vector<std::size_t> solution_;
};

}  // namespace gemcalc
