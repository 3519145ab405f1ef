#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dan/demand_graph.hpp"
#include "dan/host_graph.hpp"

namespace dan {

struct SniOptions {
  // Give every tree root delta children instead of delta - 1. A root has no
  // parent edge, so this stays within the degree bound and lets nodes whose
  // demand degree is at most delta keep all their edges direct.
  bool wide_root = false;
};

struct SniResult {
  HostGraph host;
  std::size_t steiner_count = 0;
  // sum_v p(v) H_{delta-1}(p_v) + 1
  double entropy_cost_bound = 0.0;
  // Per demand edge {u,v}, in DemandGraph::edges() order: the length of the
  // spliced tree route, d_{T_u}(u, t_{u,v}) + d_{T_v}(v, t_{v,u}) - 1.
  std::vector<std::uint32_t> route_lengths;
};

// Steiner node insertion.
//
// Every demand node v gets a (delta-1)-ary Huffman tree over p_v rooted at v
// (a root with one leaf when v has a single neighbor). Internal non-root tree
// nodes become Steiner nodes, numbered contiguously from n upward, tree by
// tree in ascending root id and breadth-first within a tree. Then, for each
// demand edge {u,v} in sorted order, the leaves t_{u,v} and t_{v,u} are
// removed and their parents joined by an edge.
//
// The host has maximum degree at most delta. Requires delta >= 3 and a
// positive marginal at every node.
SniResult steiner_node_insertion(const DemandGraph& g, int delta, SniOptions options = {});

// Upper bound on the node count of the host built above: n + 2m for delta = 3,
// otherwise floor(((d-2)n + 2m)/(d-1)) with d = delta - 1, improved to
// floor(((d-3)n + 2m)/(d-1)) when no node has demand degree 1. n counts only
// nodes of positive marginal.
std::size_t sni_node_bound(const DemandGraph& g, int delta);

}  // namespace dan
