#include "dan/demand_graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dan/error.hpp"

namespace dan {

namespace {

constexpr double kSumTolerance = 1e-9;

void require_arity(int d) {
  if (d < 2) throw Error("entropy base must be at least 2, got " + std::to_string(d));
}

}  // namespace

std::span<const Incidence> DemandGraph::incident(NodeId v) const {
  if (v >= n_) throw Error("node " + std::to_string(v) + " out of range");
  return std::span<const Incidence>(incidences_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

double DemandGraph::marginal(NodeId v) const {
  if (v >= n_) throw Error("node " + std::to_string(v) + " out of range");
  return marginals_[v];
}

double DemandGraph::weight(NodeId u, NodeId v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), DemandEdge{u, v, 0.0},
                             [](const DemandEdge& a, const DemandEdge& b) {
                               return a.u != b.u ? a.u < b.u : a.v < b.v;
                             });
  if (it != edges_.end() && it->u == u && it->v == v) return it->weight;
  return 0.0;
}

DemandGraph normalize(std::size_t n, std::span<const DemandEdge> raw) {
  std::vector<DemandEdge> edges;
  edges.reserve(raw.size());
  for (const DemandEdge& e : raw) {
    if (e.u == e.v) throw Error("self-loop at node " + std::to_string(e.u));
    if (e.u >= n || e.v >= n) throw Error("edge endpoint out of range");
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) throw Error("negative or non-finite weight");
    DemandEdge c{std::min(e.u, e.v), std::max(e.u, e.v), e.weight};
    edges.push_back(c);
  }
  std::sort(edges.begin(), edges.end(), [](const DemandEdge& a, const DemandEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      throw Error("duplicate edge {" + std::to_string(edges[i].u) + "," + std::to_string(edges[i].v) + "}");
    }
  }
  std::erase_if(edges, [](const DemandEdge& e) { return e.weight == 0.0; });
  if (edges.empty()) throw Error("empty demand");

  double total = 0.0;
  for (const DemandEdge& e : edges) total += e.weight;
  for (DemandEdge& e : edges) e.weight /= total;

  DemandGraph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.offsets_.assign(n + 1, 0);
  for (const DemandEdge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.incidences_.resize(g.offsets_[n]);
  std::vector<std::uint32_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (std::uint32_t i = 0; i < g.edges_.size(); ++i) {
    const DemandEdge& e = g.edges_[i];
    g.incidences_[fill[e.u]++] = {e.v, i};
    g.incidences_[fill[e.v]++] = {e.u, i};
  }
  g.marginals_.assign(n, 0.0);
  for (NodeId v = 0; v < n; ++v) {
    auto begin = g.incidences_.begin() + g.offsets_[v];
    auto end = g.incidences_.begin() + g.offsets_[v + 1];
    std::sort(begin, end, [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
    double sum = 0.0;
    for (auto it = begin; it != end; ++it) sum += g.edges_[it->edge].weight;
    g.marginals_[v] = sum;
  }
  return g;
}

DemandGraph normalize(std::span<const DemandEdge> raw) {
  std::size_t n = 0;
  for (const DemandEdge& e : raw) n = std::max<std::size_t>(n, std::max(e.u, e.v) + std::size_t{1});
  return normalize(n, raw);
}

Distribution::Distribution(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.symbol < b.symbol; });
  double total = 0.0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!(entries[i].probability >= 0.0)) throw Error("negative probability");
    if (i > 0 && entries[i].symbol == entries[i - 1].symbol) throw Error("duplicate symbol in distribution");
    total += entries[i].probability;
  }
  if (!entries.empty() && std::abs(total - 1.0) > kSumTolerance) {
    throw Error("distribution does not sum to 1");
  }
  std::erase_if(entries, [](const Entry& e) { return e.probability == 0.0; });
  entries_ = std::move(entries);
}

Distribution Distribution::from_weights(std::vector<Entry> weights) {
  std::sort(weights.begin(), weights.end(), [](const Entry& a, const Entry& b) { return a.symbol < b.symbol; });
  double total = 0.0;
  for (const Entry& e : weights) {
    if (!(e.probability >= 0.0)) throw Error("negative weight");
    total += e.probability;
  }
  if (!(total > 0.0)) throw Error("distribution has no positive weight");
  for (Entry& e : weights) e.probability /= total;
  return Distribution(std::move(weights));
}

double marginal(const DemandGraph& g, NodeId v) { return g.marginal(v); }

Distribution conditional(const DemandGraph& g, NodeId v) {
  const double pv = g.marginal(v);
  if (pv <= 0.0) throw Error("no demand at node " + std::to_string(v));
  std::vector<Distribution::Entry> entries;
  entries.reserve(g.degree(v));
  for (const Incidence& inc : g.incident(v)) {
    entries.push_back({inc.neighbor, g.edges()[inc.edge].weight});
  }
  // Dividing by the recomputed sum keeps the total within rounding of 1.
  return Distribution::from_weights(std::move(entries));
}

double entropy_base_d(const Distribution& dist, int d) {
  require_arity(d);
  double h = 0.0;
  for (const auto& e : dist.entries()) {
    if (e.probability > 0.0) h -= e.probability * std::log2(e.probability);
  }
  return h / std::log2(static_cast<double>(d));
}

double edge_entropy(const DemandGraph& g, int d) {
  require_arity(d);
  double h = 0.0;
  for (const DemandEdge& e : g.edges()) h -= e.weight * std::log2(e.weight);
  return h / std::log2(static_cast<double>(d));
}

double conditional_entropy(const DemandGraph& g, int d) {
  require_arity(d);
  double sum = 0.0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const double pv = g.marginal(v);
    if (pv <= 0.0) continue;
    sum += pv * entropy_base_d(conditional(g, v), d);
  }
  return 0.5 * sum;
}

double tree_cost_bound(const DemandGraph& g, int d) { return 2.0 * conditional_entropy(g, d) + 1.0; }

double epl_lower_bound(const DemandGraph& g, int delta) {
  if (delta < 2) throw Error("degree bound must be at least 2");
  return std::max(1.0, conditional_entropy(g, delta + 1) - 1.0);
}

TraceStats degree_stats(const DemandGraph& g) {
  TraceStats s;
  s.n = g.node_count();
  s.m = g.edge_count();
  s.min_degree = s.n == 0 ? 0 : g.degree(0);
  for (NodeId v = 0; v < s.n; ++v) {
    s.min_degree = std::min(s.min_degree, g.degree(v));
    s.max_degree = std::max(s.max_degree, g.degree(v));
  }
  s.avg_degree_num = 2 * s.m;
  s.avg_degree_den = s.n == 0 ? 1 : s.n;
  s.entropy = edge_entropy(g, 2);
  s.cond_entropy = conditional_entropy(g, 2);
  return s;
}

}  // namespace dan
