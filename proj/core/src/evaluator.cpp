#include "dan/evaluator.hpp"

#include <algorithm>
#include <string>

#include "dan/error.hpp"

namespace dan {

namespace {

constexpr std::uint32_t kUnreached = 0xffffffffu;

// Reusable BFS workspace that stops once all requested targets are reached.
class TargetedBfs {
 public:
  explicit TargetedBfs(const HostGraph& host)
      : host_(host), dist_(host.node_count(), kUnreached), is_target_(host.node_count(), 0) {}

  // Fills dist for every target; returns false if any target is unreachable.
  bool run(NodeId source, std::span<const NodeId> targets) {
    for (NodeId v : touched_) dist_[v] = kUnreached;
    touched_.clear();
    std::size_t remaining = 0;
    for (NodeId t : targets) {
      if (t != source && !is_target_[t]) {
        is_target_[t] = 1;
        ++remaining;
      }
    }
    dist_[source] = 0;
    touched_.push_back(source);
    for (std::size_t head = 0; head < touched_.size() && remaining > 0; ++head) {
      const NodeId x = touched_[head];
      for (NodeId y : host_.neighbors(x)) {
        if (dist_[y] != kUnreached) continue;
        dist_[y] = dist_[x] + 1;
        touched_.push_back(y);
        if (is_target_[y]) {
          is_target_[y] = 0;
          --remaining;
        }
      }
    }
    for (NodeId t : targets) is_target_[t] = 0;
    return remaining == 0;
  }

  std::uint32_t distance(NodeId v) const { return dist_[v]; }

 private:
  const HostGraph& host_;
  std::vector<std::uint32_t> dist_;
  std::vector<NodeId> touched_;
  std::vector<char> is_target_;
};

}  // namespace

double Epl::value() const {
  if (infinite_) throw Error("expected path length is infinite");
  return value_;
}

Epl expected_path_length(const DemandGraph& g, const HostGraph& host) {
  if (host.original_count() != g.node_count()) {
    throw Error("host has " + std::to_string(host.original_count()) + " original nodes, demand has " +
                std::to_string(g.node_count()));
  }
  TargetedBfs bfs(host);
  std::vector<NodeId> targets;
  double sum = 0.0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    targets.clear();
    for (const Incidence& inc : g.incident(u)) {
      if (inc.neighbor > u) targets.push_back(inc.neighbor);
    }
    if (targets.empty()) continue;
    if (!bfs.run(u, targets)) return Epl::infinite();
    // Incidences are sorted by neighbor, so this visits u's edges in edge order.
    for (const Incidence& inc : g.incident(u)) {
      if (inc.neighbor > u) sum += g.edges()[inc.edge].weight * bfs.distance(inc.neighbor);
    }
  }
  return Epl::finite(sum);
}

std::vector<std::optional<std::uint32_t>> bfs_distances(const HostGraph& host, NodeId source) {
  std::vector<std::optional<std::uint32_t>> dist(host.node_count());
  std::vector<NodeId> queue{source};
  dist.at(source) = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId x = queue[head];
    for (NodeId y : host.neighbors(x)) {
      if (dist[y]) continue;
      dist[y] = *dist[x] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

ValidationReport validate_host(const HostGraph& host, int delta, const DemandGraph& g) {
  ValidationReport report;
  report.max_degree = host.max_degree();
  report.degree_bound_ok = delta >= 0 && report.max_degree <= static_cast<std::size_t>(delta);
  report.steiner_count = host.node_count() >= host.original_count() ? host.steiner_count() : 0;
  report.connected_for_demand =
      host.original_count() == g.node_count() && expected_path_length(g, host).is_finite();
  return report;
}

std::optional<std::int64_t> integer_path_cost(std::span<const IntegerDemand> demands, const HostGraph& host) {
  std::vector<IntegerDemand> sorted(demands.begin(), demands.end());
  for (IntegerDemand& d : sorted) {
    if (d.u > d.v) std::swap(d.u, d.v);
    if (d.v >= host.node_count()) throw Error("demand endpoint out of host range");
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const IntegerDemand& a, const IntegerDemand& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  TargetedBfs bfs(host);
  std::vector<NodeId> targets;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    targets.clear();
    while (j < sorted.size() && sorted[j].u == sorted[i].u) {
      if (sorted[j].weight > 0) targets.push_back(sorted[j].v);
      ++j;
    }
    if (!targets.empty()) {
      if (!bfs.run(sorted[i].u, targets)) return std::nullopt;
      for (std::size_t k = i; k < j; ++k) {
        if (sorted[k].weight > 0) total += sorted[k].weight * static_cast<std::int64_t>(bfs.distance(sorted[k].v));
      }
    }
    i = j;
  }
  return total;
}

}  // namespace dan
