#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dan {

using NodeId = std::uint32_t;

// An undirected weighted pair. Canonical form has u < v.
struct DemandEdge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 0.0;
};

// One entry of a node's incidence list: the other endpoint and the index of
// the edge in DemandGraph::edges().
struct Incidence {
  NodeId neighbor = 0;
  std::uint32_t edge = 0;
};

// Normalized demand distribution over unordered node pairs.
//
// Nodes are 0..n-1. Edges are kept sorted by (u, v) with u < v, weights sum
// to one and are strictly positive. Nodes without incident demand are allowed
// and simply have zero marginal. Immutable after construction.
class DemandGraph {
 public:
  DemandGraph() = default;

  std::size_t node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const DemandEdge> edges() const { return edges_; }

  // Incident edges of v, sorted by neighbor id.
  std::span<const Incidence> incident(NodeId v) const;
  std::size_t degree(NodeId v) const { return incident(v).size(); }

  // p(v) = sum of the weights of edges incident to v.
  double marginal(NodeId v) const;

  // Weight of {u, v}, zero when absent.
  double weight(NodeId u, NodeId v) const;

 private:
  friend DemandGraph normalize(std::size_t n, std::span<const DemandEdge> raw);

  std::size_t n_ = 0;
  std::vector<DemandEdge> edges_;
  std::vector<std::uint32_t> offsets_;
  std::vector<Incidence> incidences_;
  std::vector<double> marginals_;
};

// Builds a normalized demand graph from nonnegative raw weights. Pairs may be
// given in either orientation; zero-weight pairs are dropped. Throws on
// self-loops, duplicate pairs, negative weights, out-of-range ids, and when no
// positive weight remains ("empty demand").
DemandGraph normalize(std::size_t n, std::span<const DemandEdge> raw);

// Same, with n inferred as one past the largest id.
DemandGraph normalize(std::span<const DemandEdge> raw);

// A finite probability distribution over integer symbols, sorted by symbol.
// Zero-probability entries are dropped on construction.
class Distribution {
 public:
  struct Entry {
    std::uint32_t symbol = 0;
    double probability = 0.0;
  };

  Distribution() = default;

  // Validates nonnegativity, uniqueness and a total of 1 within 1e-9.
  explicit Distribution(std::vector<Entry> entries);

  // Scales nonnegative weights to sum to one.
  static Distribution from_weights(std::vector<Entry> weights);

  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Entry> entries_;
};

double marginal(const DemandGraph& g, NodeId v);

// p_v(u) = p({v,u}) / p(v) over the neighbors of v. Throws "no demand at node"
// for isolated nodes.
Distribution conditional(const DemandGraph& g, NodeId v);

// -sum p log_d p, with 0 log 0 = 0. Requires d >= 2.
double entropy_base_d(const Distribution& dist, int d);

// Same over the edge distribution of g (edges as symbols).
double edge_entropy(const DemandGraph& g, int d);

// (1/2) sum_v p(v) H_d(p_v), skipping nodes of zero marginal.
double conditional_entropy(const DemandGraph& g, int d);

// sum_v p(v) H_d(p_v) + 1: the cost ceiling of the tree-splicing
// constructions when they use d-ary trees.
double tree_cost_bound(const DemandGraph& g, int d);

// Lower bound on the expected path length of any host with maximum degree
// delta (Steiner nodes allowed): max(1, (1/2) sum_v p(v) H_{delta+1}(p_v) - 1).
double epl_lower_bound(const DemandGraph& g, int delta);

struct TraceStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  // Average degree as the exact fraction 2m / n.
  std::size_t avg_degree_num = 0;
  std::size_t avg_degree_den = 1;
  double entropy = 0.0;       // H(p), base 2
  double cond_entropy = 0.0;  // (1/2) sum_v p(v) H_2(p_v)

  double avg_degree() const {
    return static_cast<double>(avg_degree_num) / static_cast<double>(avg_degree_den);
  }
};

TraceStats degree_stats(const DemandGraph& g);

}  // namespace dan
