#include "dan/hardness.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "dan/error.hpp"

namespace dan {

namespace {

std::int64_t ceil_log2(std::size_t x) {
  std::int64_t bits = 0;
  while ((std::size_t{1} << bits) < x) ++bits;
  return bits;
}

// Builder for one copy of the odd-degree construction.
class Builder {
 public:
  explicit Builder(int delta) : gadget_(degree_blocking_gadget(delta)) {}

  NodeId add_node() { return static_cast<NodeId>(n_++); }

  void force(NodeId a, NodeId b) { forced_.emplace_back(a, b); }

  // Queues `count` gadgets on v; they are materialized by finish() so that
  // all gadget nodes come after the structural nodes.
  void block(NodeId v, int count) {
    if (count < 0) throw Error("internal: negative gadget count");
    blocks_.emplace_back(v, count);
  }

  void finish() {
    std::stable_sort(blocks_.begin(), blocks_.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [v, count] : blocks_) {
      for (int i = 0; i < count; ++i) {
        const auto offset = static_cast<NodeId>(n_);
        n_ += gadget_.graph.n;
        for (const auto& [a, b] : gadget_.graph.edges) force(offset + a, offset + b);
        force(v, offset + gadget_.port);
      }
    }
    blocks_.clear();
  }

  std::size_t n() const { return n_; }
  const std::vector<std::pair<NodeId, NodeId>>& forced() const { return forced_; }

 private:
  BlockingGadget gadget_;
  std::size_t n_ = 0;
  std::vector<std::pair<NodeId, NodeId>> forced_;
  std::vector<std::pair<NodeId, int>> blocks_;
};

}  // namespace

BlockingGadget degree_blocking_gadget(int d) {
  if (d < 3 || d % 2 == 0) throw Error("blocking gadget needs an odd degree of at least 3, got " + std::to_string(d));
  BlockingGadget gadget;
  gadget.graph.n = static_cast<std::size_t>(d) + 2;
  gadget.port = static_cast<NodeId>(d) + 1;
  auto matched = [](NodeId a, NodeId b) { return a % 2 == 1 && b == a + 1; };
  for (NodeId a = 0; a <= static_cast<NodeId>(d); ++a) {
    for (NodeId b = a + 1; b <= static_cast<NodeId>(d); ++b) {
      if (b < static_cast<NodeId>(d) && matched(a, b)) continue;
      gadget.graph.edges.emplace_back(a, b);
    }
  }
  for (NodeId a = 1; a < static_cast<NodeId>(d); ++a) gadget.graph.edges.emplace_back(a, gadget.port);
  return gadget;
}

DemandGraph HardnessInstance::demand_graph() const {
  std::vector<DemandEdge> raw;
  raw.reserve(demands.size());
  for (const IntegerDemand& d : demands) raw.push_back({d.u, d.v, static_cast<double>(d.weight)});
  return normalize(n, raw);
}

HardnessInstance vertex_cover_reduction(const SimpleGraph& graph, std::size_t k, int delta) {
  if (delta < 3) throw Error("reduction needs a degree bound of at least 3");
  std::vector<int> degree(graph.n, 0);
  for (const auto& [u, v] : graph.edges) {
    if (u >= graph.n || v >= graph.n || u == v) throw Error("input graph is not simple");
    ++degree[u];
    ++degree[v];
  }
  {
    std::vector<std::pair<NodeId, NodeId>> sorted;
    for (auto [u, v] : graph.edges) sorted.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw Error("input graph is not simple");
  }
  for (int d : degree) {
    if (d != 3) throw Error("input graph is not 3-regular");
  }
  if (k < 1 || k > graph.n) throw Error("cover size must be in [1, " + std::to_string(graph.n) + "]");

  const int odd = delta % 2 == 1 ? delta : delta - 1;
  const std::int64_t log_b = std::max<std::int64_t>(1, ceil_log2(k));
  const std::size_t b = std::size_t{1} << log_b;
  const auto edge_count = static_cast<std::int64_t>(graph.edges.size());
  const std::int64_t route = log_b + 3;

  HardnessInstance inst;
  inst.delta = delta;
  inst.b = static_cast<std::int64_t>(b);
  inst.W = edge_count * route + 1;

  Builder builder(odd);
  // Selector tree in heap order.
  for (std::size_t i = 0; i < 2 * b - 1; ++i) builder.add_node();
  for (std::size_t i = 1; i < 2 * b - 1; ++i) builder.force(static_cast<NodeId>((i - 1) / 2), static_cast<NodeId>(i));
  inst.root = 0;
  builder.block(0, odd - 2);
  for (std::size_t i = 1; i < b - 1; ++i) builder.block(static_cast<NodeId>(i), odd - 3);
  for (std::size_t j = 0; j < b; ++j) {
    const auto leaf = static_cast<NodeId>(b - 1 + j);
    if (j < k) {
      inst.selectors.push_back(leaf);
      builder.block(leaf, odd - 2);
    } else {
      builder.block(leaf, odd - 1);
    }
  }

  // Vertex gadgets: r_v, two children, spare leaf.
  std::vector<std::array<NodeId, 2>> children(graph.n);
  for (std::size_t v = 0; v < graph.n; ++v) {
    const NodeId r = builder.add_node();
    const NodeId c0 = builder.add_node();
    const NodeId c1 = builder.add_node();
    const NodeId spare = builder.add_node();
    inst.vertex_roots.push_back(r);
    children[v] = {c0, c1};
    builder.force(r, c0);
    builder.force(r, c1);
    builder.force(c1, spare);
    builder.block(r, odd - 3);
    builder.block(c0, odd - 3);
    builder.block(c1, odd - 3);
    builder.block(spare, odd - 1);
  }
  // Leaf slots 0, 1 under the first child and slot 2 under the second; slot 3
  // is the spare leaf.
  std::vector<int> used_slots(graph.n, 0);
  for (const auto& [u, v] : graph.edges) {
    const NodeId t = builder.add_node();
    inst.terminals.push_back(t);
    for (NodeId x : {u, v}) {
      const int slot = used_slots[x]++;
      builder.force(children[x][slot < 2 ? 0 : 1], t);
    }
    builder.block(t, odd - 2);
  }
  builder.finish();

  const std::size_t per_copy = builder.n();
  const auto forced_per_copy = static_cast<std::int64_t>(builder.forced().size());
  inst.copies = delta % 2 == 1 ? 1 : 2;
  inst.copy_offset = inst.copies == 2 ? per_copy : 0;
  inst.n = per_copy * static_cast<std::size_t>(inst.copies);
  for (int c = 0; c < inst.copies; ++c) {
    const auto shift = static_cast<NodeId>(c * per_copy);
    for (const auto& [a, b2] : builder.forced()) inst.forced_edges.emplace_back(a + shift, b2 + shift);
  }
  if (inst.copies == 2) {
    for (std::size_t v = 0; v < per_copy; ++v) {
      inst.forced_edges.emplace_back(static_cast<NodeId>(v), static_cast<NodeId>(v + per_copy));
    }
  }
  inst.M = static_cast<std::int64_t>(inst.forced_edges.size());
  for (const auto& [a, b2] : inst.forced_edges) inst.demands.push_back({a, b2, inst.W});
  for (int c = 0; c < inst.copies; ++c) {
    const auto shift = static_cast<NodeId>(c * per_copy);
    for (NodeId t : inst.terminals) inst.demands.push_back({inst.root + shift, t + shift, 1});
  }
  if (inst.copies == 1) {
    inst.K = inst.M * inst.W + edge_count * route;
  } else {
    inst.K = 2 * (forced_per_copy * inst.W + edge_count * route) + static_cast<std::int64_t>(per_copy) * inst.W;
  }
  return inst;
}

HostGraph cover_to_host(const HardnessInstance& inst, std::span<const NodeId> cover) {
  if (cover.size() > inst.selectors.size()) {
    throw Error("cover has " + std::to_string(cover.size()) + " vertices, at most " +
                std::to_string(inst.selectors.size()) + " allowed");
  }
  std::vector<NodeId> sorted(cover.begin(), cover.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw Error("cover repeats a vertex");
  HostGraph host(inst.n, inst.n, inst.delta);
  for (const auto& [a, b] : inst.forced_edges) host.add_edge(a, b);
  for (int c = 0; c < inst.copies; ++c) {
    const auto shift = static_cast<NodeId>(static_cast<std::size_t>(c) * inst.copy_offset);
    for (std::size_t i = 0; i < cover.size(); ++i) {
      host.add_edge(inst.selectors[i] + shift, inst.vertex_roots.at(cover[i]) + shift);
    }
  }
  return host;
}

std::optional<std::int64_t> instance_cost(const HardnessInstance& inst, const HostGraph& host) {
  return integer_path_cost(inst.demands, host);
}

HardnessInstance circular_arrangement_connectify(const SimpleGraph& graph, std::span<const std::int64_t> weights,
                                                 std::int64_t K) {
  if (weights.size() != graph.edges.size()) throw Error("one weight per edge required");
  const auto n = static_cast<std::int64_t>(graph.n);
  const std::int64_t scale = n * n * n;
  std::vector<std::int64_t> w(graph.n * graph.n, 1);
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    const auto [u, v] = graph.edges[i];
    if (u >= graph.n || v >= graph.n || u == v) throw Error("input graph is not simple");
    if (weights[i] < 1) throw Error("edge weights must be at least 1");
    w[u * graph.n + v] = scale * weights[i];
    w[v * graph.n + u] = scale * weights[i];
  }
  HardnessInstance inst;
  inst.n = graph.n;
  inst.delta = 2;
  inst.K = scale * (K + 1) - 1;
  for (NodeId u = 0; u < graph.n; ++u) {
    for (NodeId v = u + 1; v < graph.n; ++v) inst.demands.push_back({u, v, w[u * graph.n + v]});
  }
  return inst;
}

}  // namespace dan
