#include "dan/balancing.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "dan/error.hpp"
#include "dan/huffman.hpp"

namespace dan {

namespace {

// Side index of v within edge e: 0 when v is the smaller endpoint.
int side_of(const DemandEdge& e, NodeId v) { return e.u == v ? 0 : 1; }

// high[e][side]: whether edge e is high-demand for that endpoint.
std::vector<std::array<bool, 2>> classify_edges(const DemandGraph& g, int t) {
  const auto edges = g.edges();
  std::vector<std::array<bool, 2>> high(edges.size(), {false, false});
  std::vector<Incidence> ranked;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const auto inc = g.incident(v);
    ranked.assign(inc.begin(), inc.end());
    std::stable_sort(ranked.begin(), ranked.end(), [&](const Incidence& a, const Incidence& b) {
      const double wa = edges[a.edge].weight;
      const double wb = edges[b.edge].weight;
      if (wa != wb) return wa > wb;
      return a.neighbor < b.neighbor;
    });
    const std::size_t keep = std::min<std::size_t>(ranked.size(), static_cast<std::size_t>(t));
    for (std::size_t i = 0; i < keep; ++i) high[ranked[i].edge][side_of(edges[ranked[i].edge], v)] = true;
  }
  return high;
}

}  // namespace

int average_degree_ceiling(const DemandGraph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) return 1;
  const std::size_t twice_m = 2 * g.edge_count();
  return static_cast<int>(std::max<std::size_t>(1, (twice_m + n - 1) / n));
}

bool threshold_fits(const DemandGraph& g, int t) {
  if (t < 2) throw Error("threshold must be at least 2");
  std::size_t internal = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const std::size_t deg = g.degree(v);
    if (deg > static_cast<std::size_t>(t)) internal += huffman_internal_count(deg - t, t);
  }
  return internal <= g.node_count();
}

std::optional<BalancingResult> threshold_feasible(const DemandGraph& g, int t) {
  if (!threshold_fits(g, t)) return std::nullopt;

  const std::size_t n = g.node_count();
  const auto edges = g.edges();
  const auto high = classify_edges(g, t);
  std::vector<bool> heavy(n, false);
  for (NodeId v = 0; v < n; ++v) heavy[v] = g.degree(v) > static_cast<std::size_t>(t);

  BalancingResult result;
  result.threshold = t;
  result.degree_bound_claimed = 2 * static_cast<std::size_t>(t) + 1;
  result.host = HostGraph(n, n, static_cast<int>(result.degree_bound_claimed));

  // attach[e][side]: host node carrying the leaf for e in that endpoint's tree.
  std::vector<std::array<NodeId, 2>> attach(edges.size());
  NodeId next_free = 0;
  auto take_free = [&]() {
    while (next_free < n && heavy[next_free]) ++next_free;
    if (next_free >= n) throw Error("capacity exceeded");
    return next_free++;
  };

  std::vector<Distribution::Entry> folded;
  std::vector<NodeId> image;
  for (NodeId v = 0; v < n; ++v) {
    if (!heavy[v]) continue;
    folded.clear();
    double high_mass = 0.0;
    for (const Incidence& inc : g.incident(v)) {
      const double w = edges[inc.edge].weight;
      if (high[inc.edge][side_of(edges[inc.edge], v)]) {
        high_mass += w;
      } else {
        folded.push_back({inc.neighbor, w});
      }
    }
    // Incidences are sorted by neighbor id, so folded[0] is the lowest-id
    // low-demand neighbor.
    folded.front().probability += high_mass;
    const HuffmanTree tree = build_huffman(Distribution::from_weights(folded), t);
    const auto nodes = tree.nodes();
    image.assign(nodes.size(), 0);
    image[0] = v;
    for (std::uint32_t x = 1; x < nodes.size(); ++x) {
      if (tree.is_leaf(x)) continue;
      image[x] = take_free();
      result.host.add_edge(image[nodes[x].parent], image[x]);
    }
    for (const Incidence& inc : g.incident(v)) {
      const int side = side_of(edges[inc.edge], v);
      if (high[inc.edge][side]) continue;
      attach[inc.edge][side] = image[nodes[tree.leaf_of(inc.neighbor)].parent];
    }
  }

  for (std::size_t e = 0; e < edges.size(); ++e) {
    const NodeId a = high[e][0] ? edges[e].u : attach[e][0];
    const NodeId b = high[e][1] ? edges[e].v : attach[e][1];
    // A high-demand endpoint may itself host the leaf parent on the other side.
    if (a != b) result.host.add_edge(a, b);
  }
  result.entropy_cost_bound = tree_cost_bound(g, t);
  return result;
}

BalancingResult demand_balancing(const DemandGraph& g) {
  auto result = threshold_feasible(g, 2 * average_degree_ceiling(g));
  if (!result) throw Error("capacity exceeded");
  return std::move(*result);
}

BalancingResult threshold_balancing(const DemandGraph& g, bool certify) {
  int lo = 2;
  int hi = 2 * average_degree_ceiling(g);
  if (!threshold_fits(g, hi)) throw Error("capacity exceeded");
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (threshold_fits(g, mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  int best = hi;
  if (certify) {
    for (int t = 2; t < best; ++t) {
      if (threshold_fits(g, t)) {
        best = t;
        break;
      }
    }
  }
  auto result = threshold_feasible(g, best);
  if (!result) throw Error("capacity exceeded");
  return std::move(*result);
}

}  // namespace dan
