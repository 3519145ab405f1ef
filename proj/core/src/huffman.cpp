#include "dan/huffman.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "dan/error.hpp"

namespace dan {

namespace {

// Construction-time node: weight plus creation rank used for tie-breaking.
struct Candidate {
  double weight;
  std::uint32_t rank;
  std::uint32_t id;
};

struct HeavierOrLater {
  bool operator()(const Candidate& a, const Candidate& b) const {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.rank > b.rank;
  }
};

std::size_t padding_for(std::size_t k, int d, int root_arity) {
  const auto r = static_cast<std::size_t>(root_arity);
  if (k <= r) return r - k;
  const auto step = static_cast<std::size_t>(d - 1);
  return (step - (k - r) % step) % step;
}

}  // namespace

std::uint32_t HuffmanTree::leaf_of(std::uint32_t symbol) const {
  auto it = std::lower_bound(leaves_.begin(), leaves_.end(), symbol,
                             [](const Leaf& l, std::uint32_t s) { return l.symbol < s; });
  if (it == leaves_.end() || it->symbol != symbol) {
    throw Error("symbol " + std::to_string(symbol) + " has no leaf");
  }
  return it->node;
}

HuffmanTree build_huffman(const Distribution& dist, int d, int root_arity) {
  if (d < 2) throw Error("Huffman arity must be at least 2");
  if (root_arity == 0) root_arity = d;
  if (root_arity < d) throw Error("root arity must be at least the tree arity");
  if (dist.empty()) throw Error("cannot build a Huffman tree over an empty distribution");

  HuffmanTree tree;
  tree.arity_ = d;
  tree.root_arity_ = root_arity;
  const auto entries = dist.entries();
  const std::size_t k = entries.size();

  if (k == 1) {
    tree.padded_leaf_count_ = 1;
    tree.nodes_.resize(2);
    tree.nodes_[0].children = {1};
    tree.nodes_[1] = {0, {}, entries[0].symbol, 1};
    tree.leaves_ = {{entries[0].symbol, 1}};
    return tree;
  }

  // Scratch forest. Ids [0, pad) are padding leaves, [pad, pad + k) real
  // leaves in symbol order, the rest merged nodes. Ranks equal ids.
  const std::size_t pad = padding_for(k, d, root_arity);
  const std::size_t leaves_total = pad + k;
  std::vector<std::vector<std::uint32_t>> children(leaves_total);
  std::priority_queue<Candidate, std::vector<Candidate>, HeavierOrLater> queue;
  for (std::uint32_t i = 0; i < pad; ++i) queue.push({0.0, i, i});
  for (std::size_t i = 0; i < k; ++i) {
    const auto id = static_cast<std::uint32_t>(pad + i);
    queue.push({entries[i].probability, id, id});
  }
  while (queue.size() > static_cast<std::size_t>(root_arity)) {
    const auto id = static_cast<std::uint32_t>(children.size());
    children.emplace_back();
    double weight = 0.0;
    for (int j = 0; j < d; ++j) {
      weight += queue.top().weight;
      children.back().push_back(queue.top().id);
      queue.pop();
    }
    queue.push({weight, id, id});
  }
  const auto scratch_root = static_cast<std::uint32_t>(children.size());
  children.emplace_back();
  while (!queue.empty()) {
    children.back().push_back(queue.top().id);
    queue.pop();
  }
  tree.padded_leaf_count_ = leaves_total;

  // Materialize breadth-first, dropping padding leaves.
  std::vector<std::uint32_t> order{scratch_root};
  tree.nodes_.push_back({});
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::uint32_t scratch = order[head];
    const auto self = static_cast<std::uint32_t>(head);
    if (scratch < leaves_total) {
      const auto symbol = entries[scratch - pad].symbol;
      tree.nodes_[self].symbol = symbol;
      tree.leaves_.push_back({symbol, self});
      continue;
    }
    for (std::uint32_t child : children[scratch]) {
      if (child < pad) continue;
      const auto child_id = static_cast<std::uint32_t>(order.size());
      order.push_back(child);
      tree.nodes_.push_back({self, {}, HuffmanTree::kNone, tree.nodes_[self].depth + 1});
      tree.nodes_[self].children.push_back(child_id);
    }
  }
  std::sort(tree.leaves_.begin(), tree.leaves_.end(),
            [](const HuffmanTree::Leaf& a, const HuffmanTree::Leaf& b) { return a.symbol < b.symbol; });
  return tree;
}

double weighted_depth(const HuffmanTree& tree, const Distribution& dist) {
  double sum = 0.0;
  for (const auto& e : dist.entries()) sum += e.probability * tree.depth_of(e.symbol);
  return sum;
}

std::size_t huffman_internal_count(std::size_t leaves, int d) {
  if (d < 2) throw Error("Huffman arity must be at least 2");
  if (leaves <= 1) return 1;
  const auto step = static_cast<std::size_t>(d - 1);
  return (leaves - 1 + step - 1) / step;
}

}  // namespace dan
