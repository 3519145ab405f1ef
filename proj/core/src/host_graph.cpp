#include "dan/host_graph.hpp"

#include <algorithm>
#include <string>

#include "dan/error.hpp"

namespace dan {

HostGraph::HostGraph(std::size_t n_total, std::size_t n_original, int delta)
    : n_original_(n_original), delta_(delta), adjacency_(n_total) {
  if (n_original > n_total) throw Error("host has fewer nodes than demand nodes");
}

std::uint64_t HostGraph::key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

bool HostGraph::add_edge(NodeId u, NodeId v) {
  if (u == v) throw Error("self-loop at host node " + std::to_string(u));
  if (u >= adjacency_.size() || v >= adjacency_.size()) {
    throw Error("host edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
  }
  if (!keys_.insert(key(u, v)).second) return false;
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  return true;
}

bool HostGraph::remove_edge(NodeId u, NodeId v) {
  if (keys_.erase(key(u, v)) == 0) return false;
  std::erase(adjacency_[u], v);
  std::erase(adjacency_[v], u);
  return true;
}

bool HostGraph::has_edge(NodeId u, NodeId v) const { return u != v && keys_.contains(key(u, v)); }

NodeId HostGraph::add_steiner_nodes(std::size_t count) {
  const auto first = static_cast<NodeId>(adjacency_.size());
  adjacency_.resize(adjacency_.size() + count);
  return first;
}

std::size_t HostGraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
  return best;
}

std::vector<std::pair<NodeId, NodeId>> HostGraph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(keys_.size());
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const HostGraph& a, const HostGraph& b) {
  return a.node_count() == b.node_count() && a.n_original_ == b.n_original_ && a.delta_ == b.delta_ &&
         a.edges() == b.edges();
}

}  // namespace dan
