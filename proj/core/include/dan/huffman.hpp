#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "dan/demand_graph.hpp"

namespace dan {

// A d-ary Huffman (optimal prefix) tree over a Distribution.
//
// Nodes are stored in breadth-first order from the root (node 0). Padding
// leaves used during construction are discarded, so every leaf carries a real
// symbol. Internal nodes have between 2 and `arity` children, except the root,
// which may have up to `root_arity` children, and the degenerate single-symbol
// tree, whose root has exactly one leaf.
class HuffmanTree {
 public:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  struct Node {
    std::uint32_t parent = kNone;
    std::vector<std::uint32_t> children;
    std::uint32_t symbol = kNone;  // kNone for internal nodes
    std::uint32_t depth = 0;
  };

  int arity() const { return arity_; }
  int root_arity() const { return root_arity_; }
  std::uint32_t root() const { return 0; }
  std::span<const Node> nodes() const { return nodes_; }
  const Node& node(std::uint32_t id) const { return nodes_.at(id); }
  bool is_leaf(std::uint32_t id) const { return nodes_.at(id).symbol != kNone; }

  std::size_t leaf_count() const { return leaves_.size(); }
  std::size_t internal_count() const { return nodes_.size() - leaves_.size(); }
  // Leaf count including the zero-weight padding leaves merged during
  // construction.
  std::size_t padded_leaf_count() const { return padded_leaf_count_; }

  // Node id of the leaf for `symbol`; throws if the symbol has no leaf.
  std::uint32_t leaf_of(std::uint32_t symbol) const;
  std::uint32_t depth_of(std::uint32_t symbol) const { return nodes_[leaf_of(symbol)].depth; }

  // Leaves as (symbol, node id), sorted by symbol.
  struct Leaf {
    std::uint32_t symbol;
    std::uint32_t node;
  };
  std::span<const Leaf> leaves() const { return leaves_; }

 private:
  friend HuffmanTree build_huffman(const Distribution& dist, int d, int root_arity);

  int arity_ = 2;
  int root_arity_ = 2;
  std::size_t padded_leaf_count_ = 0;
  std::vector<Node> nodes_;
  std::vector<Leaf> leaves_;
};

// Builds the d-ary Huffman tree for `dist`. `root_arity` (0 means d) lets the
// root take more children than the other internal nodes; it must be >= d.
//
// Merge candidates of equal weight are taken in creation order: padding
// leaves, then real leaves by ascending symbol, then merged nodes in the order
// they were formed. The result is identical across runs and platforms.
HuffmanTree build_huffman(const Distribution& dist, int d, int root_arity = 0);

// sum_i p_i * depth(leaf_i). Throws if a symbol of `dist` has no leaf.
double weighted_depth(const HuffmanTree& tree, const Distribution& dist);

// Internal node count of the d-ary Huffman tree over `leaves` symbols,
// without building it: 1 for a single leaf, else ceil((leaves-1)/(d-1)).
std::size_t huffman_internal_count(std::size_t leaves, int d);

}  // namespace dan
