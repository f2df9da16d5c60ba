#pragma once

#include <cstdint>
#include <unordered_map>

#include "polar/bits.hpp"
#include "polar/code.hpp"

namespace polar {

enum class NodeColor : std::uint8_t { white, black, gray };

// Full binary tree over the frozen mask in heap layout: node 1 is the root,
// node v has children 2v, 2v+1, leaf N+i covers u index i+1. white = all
// leaves below frozen, black = none frozen, gray = mixed.
std::vector<NodeColor> color_tree(const BitVector& frozen_mask);

struct Subblock {
  int first_index;  // 1-based u index of the subblock's first (unfrozen) leaf
  int size;         // number of leaves, a power of two
  int root_depth;   // depth of the subblock root (tree root = 0)
};

// Maximal all-unfrozen subtrees, in increasing leaf order. The subblock first
// indices partition every unfrozen index into "first of its rate-1 block" or not.
std::vector<Subblock> subblock_partition(const BitVector& frozen_mask);

struct CriticalSet {
  std::vector<int> members;  // 1-based, ascending
  bool contains(int index1) const;
  std::size_t size() const { return members.size(); }
};

// First unfrozen index of each maximal rate-1 subblock.
CriticalSet critical_set(const BitVector& frozen_mask);

// Critical set of the mask with positions 1..prefix_end additionally frozen;
// prefix_end = 0 reproduces critical_set. Empty result when nothing is left.
CriticalSet modified_critical_set(const BitVector& frozen_mask, int prefix_end);

// Memoizes modified_critical_set per prefix_end for one code.
class CriticalSetCache {
 public:
  explicit CriticalSetCache(const CodeConfig& cfg) : mask_(cfg.frozen_mask) {}
  const CriticalSet& at_prefix(int prefix_end);

 private:
  BitVector mask_;
  std::unordered_map<int, CriticalSet> memo_;
};

}  // namespace polar
