#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dan/demand_graph.hpp"

namespace dan {

// Simple undirected graph over the demand nodes 0..n_original-1 followed by
// Steiner nodes n_original..n_total-1, with a declared degree bound.
class HostGraph {
 public:
  HostGraph() = default;
  HostGraph(std::size_t n_total, std::size_t n_original, int delta);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t original_count() const { return n_original_; }
  std::size_t steiner_count() const { return adjacency_.size() - n_original_; }
  int delta() const { return delta_; }
  void set_delta(int delta) { delta_ = delta; }

  // Inserts {u, v}. Returns false when the edge already exists. Throws on
  // self-loops and out-of-range ids.
  bool add_edge(NodeId u, NodeId v);
  // Returns false when the edge does not exist.
  bool remove_edge(NodeId u, NodeId v);
  bool has_edge(NodeId u, NodeId v) const;

  // Appends `count` isolated Steiner nodes and returns the first new id.
  NodeId add_steiner_nodes(std::size_t count);

  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_.at(v); }
  std::size_t degree(NodeId v) const { return adjacency_.at(v).size(); }
  std::size_t max_degree() const;
  std::size_t edge_count() const { return keys_.size(); }

  // All edges as (u, v) with u < v, sorted.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  friend bool operator==(const HostGraph& a, const HostGraph& b);

 private:
  static std::uint64_t key(NodeId u, NodeId v);

  std::size_t n_original_ = 0;
  int delta_ = 0;
  std::vector<std::vector<NodeId>> adjacency_;
  std::unordered_set<std::uint64_t> keys_;
};

}  // namespace dan
