#include "gemcalc/exact_cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace gemcalc {

ExactCover::ExactCover(std::size_t item_count) : item_count_(item_count), sizes_(item_count + 1, 0) {
  nodes_.resize(item_count + 1);
  for (std::size_t i = 0; i <= item_count; ++i) {
    nodes_[i] = Node{i == 0 ? item_count : i - 1, i == item_count ? 0 : i + 1, i, i, i, static_cast<std::size_t>(-1)};
  }
}

std::size_t ExactCover::add_option(std::span<const std::size_t> items) {
  if (items.empty()) throw std::invalid_argument("exact cover option must not be empty");
  const std::size_t option = option_count_++;
  const std::size_t first = nodes_.size();
  for (std::size_t k = 0; k < items.size(); ++k) {
    const std::size_t column = items[k] + 1;
    if (items[k] >= item_count_) throw std::out_of_range("exact cover item out of range");
    const std::size_t id = nodes_.size();
    Node node{};
    node.column = column;
    node.option = option;
    node.up = nodes_[column].up;
    node.down = column;
    node.left = k == 0 ? id : id - 1;
    node.right = first;
    nodes_.push_back(node);
    nodes_[nodes_[column].up].down = id;
    nodes_[column].up = id;
    if (k > 0) nodes_[id - 1].right = id;
    nodes_[first].left = id;
    ++sizes_[column];
  }
  return option;
}

void ExactCover::cover(std::size_t column) {
  nodes_[nodes_[column].right].left = nodes_[column].left;
  nodes_[nodes_[column].left].right = nodes_[column].right;
  for (std::size_t i = nodes_[column].down; i != column; i = nodes_[i].down) {
    for (std::size_t j = nodes_[i].right; j != i; j = nodes_[j].right) {
      nodes_[nodes_[j].down].up = nodes_[j].up;
      nodes_[nodes_[j].up].down = nodes_[j].down;
      --sizes_[nodes_[j].column];
    }
  }
}

void ExactCover::uncover(std::size_t column) {
  for (std::size_t i = nodes_[column].up; i != column; i = nodes_[i].up) {
    for (std::size_t j = nodes_[i].left; j != i; j = nodes_[j].left) {
      ++sizes_[nodes_[j].column];
      nodes_[nodes_[j].down].up = j;
      nodes_[nodes_[j].up].down = j;
    }
  }
  nodes_[nodes_[column].right].left = column;
  nodes_[nodes_[column].left].right = column;
}

bool ExactCover::search(std::vector<std::size_t>& chosen) {
  if (nodes_[0].right == 0) {
    solution_ = chosen;
    return true;
  }
  std::size_t best = nodes_[0].right;
  for (std::size_t c = nodes_[best].right; c != 0; c = nodes_[c].right) {
    if (sizes_[c] < sizes_[best]) best = c;
  }
  if (sizes_[best] == 0) return false;

  bool found = false;
  cover(best);
  for (std::size_t r = nodes_[best].down; r != best && !found; r = nodes_[r].down) {
    chosen.push_back(nodes_[r].option);
    for (std::size_t j = nodes_[r].right; j != r; j = nodes_[j].right) cover(nodes_[j].column);
    found = search(chosen);
    for (std::size_t j = nodes_[r].left; j != r; j = nodes_[j].left) uncover(nodes_[j].column);
    chosen.pop_back();
  }
  uncover(best);
  return found;
}

std::optional<std::vector<std::size_t>> ExactCover::solve_first() {
  std::vector<std::size_t> chosen;
  solution_.clear();
  if (!search(chosen)) return std::nullopt;
  std::vector<std::size_t> result = solution_;
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace gemcalc
