#include "polar/critical_set.hpp"

#include <algorithm>

namespace polar {

bool CriticalSet::contains(int index1) const {
  return std::binary_search(members.begin(), members.end(), index1);
}

std::vector<NodeColor> color_tree(const BitVector& frozen_mask) {
  std::size_t N = frozen_mask.size();
  if (N < 2 || !is_pow2(N))
    throw std::invalid_argument("color_tree: mask length must be a power of two >= 2");
  require_bits(frozen_mask, "color_tree");
  std::vector<NodeColor> color(2 * N);
  for (std::size_t i = 0; i < N; ++i)
    color[N + i] = frozen_mask[i] ? NodeColor::white : NodeColor::black;
  for (std::size_t v = N - 1; v >= 1; --v) {
    NodeColor l = color[2 * v], r = color[2 * v + 1];
    color[v] = (l == r) ? l : NodeColor::gray;
  }
  return color;
}

std::vector<Subblock> subblock_partition(const BitVector& frozen_mask) {
  auto color = color_tree(frozen_mask);
  std::size_t N = frozen_mask.size();
  if (std::all_of(frozen_mask.begin(), frozen_mask.end(), [](std::uint8_t b) { return b != 0; }))
    throw std::invalid_argument("subblock_partition: mask has no unfrozen positions");

  std::vector<Subblock> blocks;
  // Preorder walk; a black node is a maximal rate-1 subtree whenever reached,
  // because descent stops at black nodes.
  struct Item {
    std::size_t v;
    int depth;
  };
  std::vector<Item> stack{{1, 0}};
  while (!stack.empty()) {
    auto [v, depth] = stack.back();
    stack.pop_back();
    if (color[v] == NodeColor::white) continue;
    // leaf span of heap node v among N leaves
    std::size_t span = 1, first = v;
    while (first < N) {
      first *= 2;
      span *= 2;
    }
    if (color[v] == NodeColor::black) {
      blocks.push_back(Subblock{static_cast<int>(first - N) + 1, static_cast<int>(span), depth});
      continue;
    }
    stack.push_back(Item{2 * v + 1, depth + 1});
    stack.push_back(Item{2 * v, depth + 1});
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Subblock& a, const Subblock& b) { return a.first_index < b.first_index; });
  return blocks;
}

CriticalSet critical_set(const BitVector& frozen_mask) {
  auto blocks = subblock_partition(frozen_mask);
  CriticalSet s;
  s.members.reserve(blocks.size());
  for (const auto& b : blocks) s.members.push_back(b.first_index);
  return s;
}

CriticalSet modified_critical_set(const BitVector& frozen_mask, int prefix_end) {
  if (prefix_end < 0 || static_cast<std::size_t>(prefix_end) > frozen_mask.size())
    throw std::invalid_argument("modified_critical_set: prefix_end out of range");
  BitVector mask = frozen_mask;
  for (int i = 0; i < prefix_end; ++i) mask[static_cast<std::size_t>(i)] = 1;
  if (std::all_of(mask.begin(), mask.end(), [](std::uint8_t b) { return b != 0; }))
    return CriticalSet{};
  return critical_set(mask);
}

const CriticalSet& CriticalSetCache::at_prefix(int prefix_end) {
  auto it = memo_.find(prefix_end);
  if (it != memo_.end()) return it->second;
  return memo_.emplace(prefix_end, modified_critical_set(mask_, prefix_end)).first->second;
}

}  // namespace polar
