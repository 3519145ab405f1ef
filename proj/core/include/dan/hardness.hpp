#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dan/demand_graph.hpp"
#include "dan/evaluator.hpp"
#include "dan/host_graph.hpp"

namespace dan {

struct SimpleGraph {
  std::size_t n = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;
};

// Graph on d + 2 nodes where `port` has degree d - 1 and every other node has
// degree d: K_{d+1} on nodes 0..d minus the matching {1,2}, {3,4}, ...,
// {d-2,d-1}, plus node d + 1 joined to nodes 1..d-1. Requires odd d >= 3.
struct BlockingGadget {
  SimpleGraph graph;
  NodeId port = 0;
};
BlockingGadget degree_blocking_gadget(int d);

// Integer-weighted decision instance: is there a host of maximum degree
// `delta` with sum_w w * dist <= K?
struct HardnessInstance {
  std::size_t n = 0;
  int delta = 0;
  std::vector<IntegerDemand> demands;
  std::int64_t K = 0;
  std::int64_t W = 0;
  // Number of forced (weight W) pairs in the whole instance.
  std::int64_t M = 0;
  std::int64_t b = 0;

  // Vertex-cover instances only; ids refer to the first copy.
  NodeId root = 0;
  std::vector<NodeId> selectors;     // s_1..s_k
  std::vector<NodeId> vertex_roots;  // r_v per input vertex
  std::vector<NodeId> terminals;     // t_e per input edge
  // 1 for odd delta; 2 for even delta, the second copy shifted by copy_offset.
  int copies = 1;
  std::size_t copy_offset = 0;
  std::vector<std::pair<NodeId, NodeId>> forced_edges;

  // Normalized demand graph over all n nodes.
  DemandGraph demand_graph() const;
};

// Reduction from vertex cover on a 3-regular graph with cover size k.
//
// Node layout of one copy: the selector tree in heap order (root 0, leaves
// b-1..2b-2, the first k leaves being the selectors), then r_v and its two
// children and spare leaf per input vertex, then one terminal per input edge,
// then the blocking gadgets in order of the node they are attached to.
// b = max(2, 2^ceil(log2 k)), W = |E|(log2 b + 3) + 1, and for odd delta
// K = M W + |E|(log2 b + 3). Even delta takes two copies of the delta - 1
// construction with a forced pair between corresponding nodes, and
// K = 2(M' W + |E|(log2 b + 3)) + N W where M' and N are the forced pair and
// node counts of one copy.
//
// Interior selector-tree nodes and the children of each r_v receive
// delta - 3 gadgets so that every non-port node ends at degree delta.
HardnessInstance vertex_cover_reduction(const SimpleGraph& graph, std::size_t k, int delta);

// Forced edges plus {s_i, r_{v_i}} for the i-th cover vertex, in every copy.
// Throws when the cover has more than k vertices or repeats one.
HostGraph cover_to_host(const HardnessInstance& inst, std::span<const NodeId> cover);

// sum w * dist for the instance demands on `host`, or std::nullopt when some
// demand pair is disconnected.
std::optional<std::int64_t> instance_cost(const HardnessInstance& inst, const HostGraph& host);

// Circular arrangement instance (graph, weights, K) turned into one over the
// complete graph: n^3 w(e) on edges of the graph, 1 on all other pairs, and
// K' = n^3 (K + 1) - 1. delta is 2.
HardnessInstance circular_arrangement_connectify(const SimpleGraph& graph, std::span<const std::int64_t> weights,
                                                 std::int64_t K);

}  // namespace dan
