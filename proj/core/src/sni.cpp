#include "dan/sni.hpp"

#include <array>
#include <string>

#include "dan/error.hpp"
#include "dan/huffman.hpp"

namespace dan {

SniResult steiner_node_insertion(const DemandGraph& g, int delta, SniOptions options) {
  if (delta < 3) throw Error("Steiner node insertion needs a degree bound of at least 3");
  const std::size_t n = g.node_count();
  for (NodeId v = 0; v < n; ++v) {
    if (g.marginal(v) <= 0.0) throw Error("no demand at node " + std::to_string(v));
  }

  const int arity = delta - 1;
  const int root_arity = options.wide_root ? delta : arity;
  std::vector<HuffmanTree> trees;
  trees.reserve(n);
  std::size_t steiner = 0;
  for (NodeId v = 0; v < n; ++v) {
    trees.push_back(build_huffman(conditional(g, v), arity, root_arity));
    steiner += trees.back().internal_count() - 1;
  }

  SniResult result;
  result.host = HostGraph(n + steiner, n, delta);
  result.steiner_count = steiner;

  // attach[e][side]: host node that replaces the parent of the leaf for edge e
  // in the tree of endpoint e.u (side 0) or e.v (side 1).
  const auto edges = g.edges();
  std::vector<std::array<NodeId, 2>> attach(edges.size());
  std::vector<std::array<std::uint32_t, 2>> depth(edges.size());
  auto next_steiner = static_cast<NodeId>(n);
  std::vector<NodeId> image;
  for (NodeId v = 0; v < n; ++v) {
    const HuffmanTree& tree = trees[v];
    const auto nodes = tree.nodes();
    image.assign(nodes.size(), 0);
    image[0] = v;
    for (std::uint32_t x = 1; x < nodes.size(); ++x) {
      if (tree.is_leaf(x)) continue;
      image[x] = next_steiner++;
      result.host.add_edge(image[nodes[x].parent], image[x]);
    }
    for (const Incidence& inc : g.incident(v)) {
      const std::uint32_t leaf = tree.leaf_of(inc.neighbor);
      const int side = edges[inc.edge].u == v ? 0 : 1;
      attach[inc.edge][side] = image[nodes[leaf].parent];
      depth[inc.edge][side] = nodes[leaf].depth;
    }
  }

  result.route_lengths.reserve(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    // Trees are disjoint apart from their roots, so each splice is new.
    if (!result.host.add_edge(attach[e][0], attach[e][1])) {
      throw Error("internal: duplicate splice edge");
    }
    result.route_lengths.push_back(depth[e][0] + depth[e][1] - 1);
  }
  result.entropy_cost_bound = tree_cost_bound(g, arity);
  return result;
}

std::size_t sni_node_bound(const DemandGraph& g, int delta) {
  if (delta < 3) throw Error("Steiner node insertion needs a degree bound of at least 3");
  std::size_t n = 0;
  bool has_leaf = false;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) == 0) continue;
    ++n;
    has_leaf = has_leaf || g.degree(v) == 1;
  }
  const std::size_t m = g.edge_count();
  if (delta == 3) return n + 2 * m;
  const std::size_t d = static_cast<std::size_t>(delta) - 1;
  const std::size_t per_node = has_leaf ? d - 2 : d - 3;
  return (per_node * n + 2 * m) / (d - 1);
}

}  // namespace dan
