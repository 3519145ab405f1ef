#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dan/demand_graph.hpp"
#include "dan/host_graph.hpp"

namespace dan {

// Expected path length: a finite nonnegative value or "infinite" when some
// positive-demand pair is disconnected in the host.
class Epl {
 public:
  static Epl finite(double value) { return Epl(value, false); }
  static Epl infinite() { return Epl(0.0, true); }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  // Throws when infinite.
  double value() const;

  friend bool operator==(const Epl& a, const Epl& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::partial_ordering operator<=>(const Epl& a, const Epl& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  Epl(double value, bool infinite) : value_(value), infinite_(infinite) {}
  double value_;
  bool infinite_;
};

// sum over demand edges of p({u,v}) * d_host(u,v), by one truncated BFS per
// demand node that is the smaller endpoint of some demand edge. Contributions
// are summed in edge order. Throws if host.original_count() != g.node_count().
Epl expected_path_length(const DemandGraph& g, const HostGraph& host);

// Hop distances from `source`; unreachable nodes get std::nullopt.
std::vector<std::optional<std::uint32_t>> bfs_distances(const HostGraph& host, NodeId source);

struct ValidationReport {
  std::size_t max_degree = 0;
  bool degree_bound_ok = false;
  bool connected_for_demand = false;
  std::size_t steiner_count = 0;
};

// Reports violations rather than throwing.
ValidationReport validate_host(const HostGraph& host, int delta, const DemandGraph& g);

// Integer-weighted variant: sum w * d_host(u,v) exactly, or std::nullopt when
// a positive-weight pair is disconnected. Pairs use host node ids directly.
struct IntegerDemand {
  NodeId u = 0;
  NodeId v = 0;
  std::int64_t weight = 0;
};
std::optional<std::int64_t> integer_path_cost(std::span<const IntegerDemand> demands, const HostGraph& host);

}  // namespace dan
