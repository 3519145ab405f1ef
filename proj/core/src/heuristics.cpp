#include "dan/heuristics.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <unordered_set>

#include "dan/error.hpp"
#include "dan/evaluator.hpp"

namespace dan {

namespace {

constexpr NodeId kNoNode = 0xffffffffu;

std::uint64_t pair_key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

bool is_connected(const HostGraph& host) {
  if (host.node_count() <= 1) return true;
  std::size_t reached = 0;
  for (const auto& d : bfs_distances(host, 0)) reached += d.has_value();
  return reached == host.node_count();
}

void finish(HeuristicOutcome& out, const DemandGraph& g, int delta) {
  if (out.failure) return;
  if (out.host.max_degree() > static_cast<std::size_t>(delta)) {
    out.failure = "degree bound exceeded";
  } else if (expected_path_length(g, out.host).is_infinite()) {
    out.failure = "disconnected demand pair (infinite expected path length)";
  }
}

HeavyPrefix build_prefix(const DemandGraph& g, std::span<const std::uint32_t> order, std::size_t length,
                         SniOptions options, int d1) {
  HeavyPrefix prefix;
  prefix.edges.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(length));
  if (length == 0) return prefix;
  const auto edges = g.edges();
  for (std::uint32_t e : prefix.edges) {
    prefix.nodes.push_back(edges[e].u);
    prefix.nodes.push_back(edges[e].v);
  }
  std::sort(prefix.nodes.begin(), prefix.nodes.end());
  prefix.nodes.erase(std::unique(prefix.nodes.begin(), prefix.nodes.end()), prefix.nodes.end());
  auto compact = [&](NodeId v) {
    return static_cast<NodeId>(std::lower_bound(prefix.nodes.begin(), prefix.nodes.end(), v) - prefix.nodes.begin());
  };
  std::vector<DemandEdge> raw;
  raw.reserve(length);
  for (std::uint32_t e : prefix.edges) raw.push_back({compact(edges[e].u), compact(edges[e].v), edges[e].weight});
  prefix.instance = normalize(prefix.nodes.size(), raw);
  prefix.sni = steiner_node_insertion(prefix.instance, d1, options);
  return prefix;
}

// Copies the prefix host into `host`, placing its Steiner nodes on the nodes
// of `host` outside the prefix in ascending id.
void embed_prefix(const HeavyPrefix& prefix, HostGraph& host) {
  if (prefix.edges.empty()) return;
  const std::size_t n = host.node_count();
  std::vector<NodeId> image(prefix.sni.host.node_count(), kNoNode);
  std::vector<char> used(n, 0);
  for (std::size_t i = 0; i < prefix.nodes.size(); ++i) {
    image[i] = prefix.nodes[i];
    used[prefix.nodes[i]] = 1;
  }
  NodeId next = 0;
  for (std::size_t i = prefix.nodes.size(); i < image.size(); ++i) {
    while (next < n && used[next]) ++next;
    if (next >= n) throw Error("capacity exceeded");
    image[i] = next++;
  }
  for (const auto& [a, b] : prefix.sni.host.edges()) host.add_edge(image[a], image[b]);
}

HostGraph tree_overlay(std::size_t n, int degree) {
  HostGraph tree(n, n, degree);
  const std::size_t arity = static_cast<std::size_t>(degree) - 1;
  for (std::size_t i = 1; i < n; ++i) tree.add_edge(static_cast<NodeId>((i - 1) / arity), static_cast<NodeId>(i));
  return tree;
}

HostGraph light_overlay(std::size_t n, int degree, Rng& rng) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    HostGraph candidate = random_regular(n, degree, rng);
    if (is_connected(candidate)) return candidate;
  }
  return tree_overlay(n, degree);
}

// Nodes on the smaller side of the tree after cutting {u, v}. Both sides are
// explored one node at a time so the work is proportional to the smaller one.
std::vector<NodeId> smaller_side(const std::vector<std::vector<NodeId>>& tree, NodeId u, NodeId v,
                                 std::vector<char>& mark) {
  std::array<std::vector<NodeId>, 2> seen{std::vector<NodeId>{u}, std::vector<NodeId>{v}};
  std::array<std::size_t, 2> head{0, 0};
  mark[u] = 1;
  mark[v] = 2;
  int done = -1;
  while (done < 0) {
    for (int s = 0; s < 2 && done < 0; ++s) {
      if (head[s] == seen[s].size()) {
        done = s;
        break;
      }
      const NodeId x = seen[s][head[s]++];
      for (NodeId y : tree[x]) {
        if (mark[y]) continue;
        mark[y] = static_cast<char>(s + 1);
        seen[s].push_back(y);
      }
    }
  }
  for (const auto& side : seen) {
    for (NodeId x : side) mark[x] = 0;
  }
  return std::move(seen[done]);
}

}  // namespace

HeavyPrefix heavy_prefix(const DemandGraph& g, int d1, std::size_t budget, SniOptions options) {
  if (d1 < 3) throw Error("heavy part needs a degree of at least 3");
  const auto edges = g.edges();
  std::vector<std::uint32_t> order(edges.size());
  std::iota(order.begin(), order.end(), 0u);
  // Edge indices already follow (u, v) order, so a stable sort breaks ties.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return edges[a].weight > edges[b].weight; });

  auto fits = [&](std::size_t length) {
    return build_prefix(g, order, length, options, d1).sni.host.node_count() <= budget;
  };
  std::size_t lo = 0;
  std::size_t hi = order.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (fits(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return build_prefix(g, order, lo, options, d1);
}

HeuristicOutcome fixed_degree(const DemandGraph& g, int delta, std::uint64_t seed, FixedDegreeOptions options) {
  if (delta < 6) throw Error("fixed-degree heuristic needs a degree bound of at least 6");
  const int d2 = options.light_degree;
  const int d1 = delta - d2;
  if (d2 < 2 || d1 < 3) throw Error("invalid degree split " + std::to_string(d1) + "+" + std::to_string(d2));

  const std::size_t n = g.node_count();
  Rng rng(seed);
  HeuristicOutcome out{"fixed", seed, HostGraph(n, n, delta), std::nullopt};
  embed_prefix(heavy_prefix(g, d1, n), out.host);
  for (const auto& [a, b] : light_overlay(n, d2, rng).edges()) out.host.add_edge(a, b);
  if (options.densify) fill_random_edges(out.host, delta, rng);
  finish(out, g, delta);
  return out;
}

HeuristicOutcome random_tree(const DemandGraph& g, int delta, std::uint64_t seed) {
  if (delta < 2) throw Error("random tree needs a degree bound of at least 2");
  const std::size_t n = g.node_count();
  Rng rng(seed);
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  rng.shuffle(std::span<NodeId>(perm));
  HeuristicOutcome out{"rtree", seed, HostGraph(n, n, delta), std::nullopt};
  const std::size_t arity = static_cast<std::size_t>(delta) - 1;
  for (std::size_t i = 1; i < n; ++i) out.host.add_edge(perm[(i - 1) / arity], perm[i]);
  finish(out, g, delta);
  return out;
}

void fill_random_edges(HostGraph& host, int cap, Rng& rng) {
  const auto limit = static_cast<std::size_t>(std::max(cap, 0));
  std::vector<NodeId> open;
  for (NodeId v = 0; v < host.node_count(); ++v) {
    if (host.degree(v) < limit) open.push_back(v);
  }
  auto close_full = [&](std::size_t i) {
    if (host.degree(open[i]) < limit) return false;
    open[i] = open.back();
    open.pop_back();
    return true;
  };

  int misses = 0;
  while (open.size() >= 2 && misses < 32) {
    std::size_t i = rng.below(open.size());
    std::size_t j = rng.below(open.size());
    if (i == j || host.has_edge(open[i], open[j])) {
      ++misses;
      continue;
    }
    misses = 0;
    host.add_edge(open[i], open[j]);
    if (i < j) std::swap(i, j);
    close_full(i);
    close_full(j);
  }

  // Random picks stalled; finish with a shuffled pass over all open pairs so
  // that the result is maximal.
  std::sort(open.begin(), open.end());
  std::vector<std::pair<NodeId, NodeId>> candidates;
  for (std::size_t i = 0; i < open.size(); ++i) {
    for (std::size_t j = i + 1; j < open.size(); ++j) {
      if (!host.has_edge(open[i], open[j])) candidates.emplace_back(open[i], open[j]);
    }
  }
  rng.shuffle(std::span<std::pair<NodeId, NodeId>>(candidates));
  for (const auto& [a, b] : candidates) {
    if (host.degree(a) < limit && host.degree(b) < limit) host.add_edge(a, b);
  }
}

HostGraph random_regular(std::size_t n, int delta, Rng& rng) {
  if (delta < 1) throw Error("degree bound must be positive");
  const std::size_t cap = n == 0 ? 0 : std::min<std::size_t>(static_cast<std::size_t>(delta), n - 1);
  const int attempts = (n * cap) % 2 == 1 ? 1 : 64;
  HostGraph host;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    host = HostGraph(n, n, delta);
    fill_random_edges(host, static_cast<int>(cap), rng);
    bool regular = true;
    for (NodeId v = 0; v < n && regular; ++v) regular = host.degree(v) == cap;
    if (regular) break;
  }
  return host;
}

HostGraph random_regular(std::size_t n, int delta, std::uint64_t seed) {
  Rng rng(seed);
  return random_regular(n, delta, rng);
}

HeuristicOutcome random_graph_design(const DemandGraph& g, int delta, std::uint64_t seed) {
  Rng rng(seed);
  HeuristicOutcome out{"rgraph", seed, HostGraph(), std::nullopt};
  for (int attempt = 0; attempt < 32; ++attempt) {
    out.host = random_regular(g.node_count(), delta, rng);
    if (expected_path_length(g, out.host).is_finite()) break;
  }
  finish(out, g, delta);
  return out;
}

HeuristicOutcome greedy_edge_selection(const DemandGraph& g, int delta) {
  if (delta < 1) throw Error("degree bound must be positive");
  const std::size_t n = g.node_count();
  const auto edges = g.edges();
  std::vector<std::uint32_t> order(edges.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return edges[a].weight > edges[b].weight; });
  HeuristicOutcome out{"ges", 0, HostGraph(n, n, delta), std::nullopt};
  const auto cap = static_cast<std::size_t>(delta);
  for (std::uint32_t e : order) {
    if (out.host.degree(edges[e].u) < cap && out.host.degree(edges[e].v) < cap) {
      out.host.add_edge(edges[e].u, edges[e].v);
    }
  }
  finish(out, g, delta);
  return out;
}

HeuristicOutcome greedy_edge_deletion(const DemandGraph& g, int delta) {
  if (delta < 1) throw Error("degree bound must be positive");
  const std::size_t n = g.node_count();
  const auto edges = g.edges();
  HeuristicOutcome out{"ged", 0, HostGraph(n, n, delta), std::nullopt};
  HostGraph& host = out.host;
  for (const DemandEdge& e : edges) host.add_edge(e.u, e.v);

  // Spanning tree over the nodes with demand, by BFS from the first of them.
  std::vector<std::vector<NodeId>> tree(n);
  std::unordered_set<std::uint64_t> tree_edges;
  {
    NodeId root = 0;
    while (root < n && g.degree(root) == 0) ++root;
    std::vector<char> seen(n, 0);
    std::vector<NodeId> queue{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId x = queue[head];
      for (NodeId y : host.neighbors(x)) {
        if (seen[y]) continue;
        seen[y] = 1;
        queue.push_back(y);
        tree[x].push_back(y);
        tree[y].push_back(x);
        tree_edges.insert(pair_key(x, y));
      }
    }
    for (NodeId v = 0; v < n; ++v) {
      if (g.degree(v) > 0 && !seen[v]) {
        out.failure = "demand graph is disconnected";
        return out;
      }
    }
  }

  std::vector<std::uint32_t> order(edges.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return edges[a].weight < edges[b].weight; });

  const auto cap = static_cast<std::size_t>(delta);
  std::vector<char> mark(n, 0);
  for (std::uint32_t e : order) {
    const NodeId u = edges[e].u;
    const NodeId v = edges[e].v;
    if (host.degree(u) <= cap && host.degree(v) <= cap) continue;
    if (!tree_edges.contains(pair_key(u, v))) {
      host.remove_edge(u, v);
      continue;
    }
    std::erase(tree[u], v);
    std::erase(tree[v], u);
    const std::vector<NodeId> side = smaller_side(tree, u, v, mark);
    for (NodeId x : side) mark[x] = 1;
    NodeId rx = kNoNode;
    NodeId ry = kNoNode;
    for (NodeId x : side) {
      for (NodeId y : host.neighbors(x)) {
        if (mark[y] || (x == u && y == v) || (x == v && y == u)) continue;
        rx = x;
        ry = y;
        break;
      }
      if (rx != kNoNode) break;
    }
    for (NodeId x : side) mark[x] = 0;
    if (rx == kNoNode) {
      // Bridge: keep it.
      tree[u].push_back(v);
      tree[v].push_back(u);
      continue;
    }
    host.remove_edge(u, v);
    tree_edges.erase(pair_key(u, v));
    tree_edges.insert(pair_key(rx, ry));
    tree[rx].push_back(ry);
    tree[ry].push_back(rx);
  }
  finish(out, g, delta);
  return out;
}

HeuristicOutcome hybrid_edge_deletion(const DemandGraph& g, int delta, std::uint64_t seed) {
  HeuristicOutcome out = greedy_edge_deletion(g, delta);
  out.algorithm = "hed";
  out.seed = seed;
  if (out.ok() || delta < 3) return out;

  const std::size_t n = g.node_count();
  std::vector<DemandEdge> kept;
  for (const auto& [a, b] : out.host.edges()) kept.push_back({a, b, g.weight(a, b)});
  const DemandGraph reduced = normalize(n, kept);

  Rng rng(seed);
  out.host = HostGraph(n, n, delta);
  out.failure.reset();
  embed_prefix(heavy_prefix(reduced, delta, n, SniOptions{.wide_root = true}), out.host);
  fill_random_edges(out.host, delta, rng);
  finish(out, g, delta);
  return out;
}

}  // namespace dan
