#pragma once

#include <cstddef>
#include <optional>

#include "dan/demand_graph.hpp"
#include "dan/host_graph.hpp"

namespace dan {

struct BalancingResult {
  HostGraph host;  // no Steiner nodes
  int threshold = 0;
  // sum_u p(u) H_t(p_u) + 1
  double entropy_cost_bound = 0.0;
  // 2t + 1
  std::size_t degree_bound_claimed = 0;
};

// max(1, ceil(2m / n)).
int average_degree_ceiling(const DemandGraph& g);

// Whether the internal nodes of the threshold-t trees fit injectively into
// the node set: sum over nodes with degree > t of the internal node count of
// a t-ary Huffman tree on deg(v) - t leaves must not exceed n.
bool threshold_fits(const DemandGraph& g, int t);

// Threshold balancing with threshold t >= 2.
//
// A node is heavy when its demand degree exceeds t. Each node keeps its t
// heaviest incident edges as high-demand (ties: heavier first, then lower
// neighbor id); a heavy node v routes the rest through a t-ary Huffman tree
// over its low-demand neighbors L_v, where the high-demand mass is folded
// onto the lowest-id member of L_v. Tree roots are the heavy nodes
// themselves; other internal tree nodes take the non-heavy nodes in
// ascending id. Demand edges are then connected directly (high/high), between
// leaf parents (low/low), or from the high side to the leaf parent on the
// low side.
//
// Returns std::nullopt when the internal nodes do not fit. On success the
// host has maximum degree at most 2t + 1.
std::optional<BalancingResult> threshold_feasible(const DemandGraph& g, int t);

// threshold_feasible with t = 2 * average_degree_ceiling(g), which always
// fits. Throws "capacity exceeded" otherwise.
BalancingResult demand_balancing(const DemandGraph& g);

// Smallest feasible threshold in [2, 2 * average_degree_ceiling(g)], found by
// binary search. With `certify`, every smaller threshold is also checked and
// the linear-scan minimum is used if the search missed it.
BalancingResult threshold_balancing(const DemandGraph& g, bool certify = true);

}  // namespace dan
