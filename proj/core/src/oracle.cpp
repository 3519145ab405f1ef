#include "dan/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dan/error.hpp"

namespace dan {

namespace {

constexpr double kTie = 1e-12;
using Mask = std::uint32_t;

class Search {
 public:
  // Only hosts strictly cheaper than `incumbent` (by more than the tie
  // tolerance) are reported.
  Search(const DemandGraph& g, int delta, std::size_t steiner, std::optional<double> incumbent)
      : n_(static_cast<int>(g.node_count())),
        total_(n_ + static_cast<int>(steiner)),
        delta_(delta),
        best_(incumbent) {
    for (const DemandEdge& e : g.edges()) {
      weight_[e.u][e.v] = e.weight;
      weight_[e.v][e.u] = e.weight;
      targets_[e.u] |= Mask{1} << e.v;
      base_ += e.weight;
    }
    // Steiner-to-demand blocks, one per Steiner node, then Steiner-Steiner
    // pairs, then demand pairs.
    for (int s = n_; s < total_; ++s) {
      for (int d = 0; d < n_; ++d) pairs_.emplace_back(d, s);
    }
    for (int a = n_; a < total_; ++a) {
      for (int b = a + 1; b < total_; ++b) pairs_.emplace_back(a, b);
    }
    for (int a = 0; a < n_; ++a) {
      for (int b = a + 1; b < n_; ++b) pairs_.emplace_back(a, b);
    }
    for (const auto& [a, b] : pairs_) {
      ++open_[a];
      ++open_[b];
    }
    chosen_.assign(pairs_.size(), 0);
  }

  void run() { visit(0); }

  std::optional<double> best() const { return found_ ? best_ : std::nullopt; }
  std::uint64_t candidates() const { return candidates_; }

  HostGraph host() const {
    HostGraph h(static_cast<std::size_t>(total_), static_cast<std::size_t>(n_), delta_);
    for (const auto& [a, b] : best_edges_) h.add_edge(static_cast<NodeId>(a), static_cast<NodeId>(b));
    return h;
  }

 private:
  bool is_steiner(int v) const { return v >= n_; }
  Mask demand_mask(int s) const { return adj_[s] & ((Mask{1} << n_) - 1); }

  void visit(std::size_t idx) {
    // Steiner labels: demand neighborhoods must be nonincreasing.
    if (idx > 0 && idx <= static_cast<std::size_t>((total_ - n_) * n_) && idx % n_ == 0) {
      const int s = n_ + static_cast<int>(idx / n_) - 1;
      if (s > n_ && demand_mask(s) > demand_mask(s - 1)) return;
    }
    if (idx == pairs_.size()) {
      evaluate();
      return;
    }
    const auto [a, b] = pairs_[idx];
    --open_[a];
    --open_[b];
    if (deg_[a] < delta_ && deg_[b] < delta_) {
      set(a, b, true);
      chosen_[idx] = 1;
      visit(idx + 1);
      chosen_[idx] = 0;
      set(a, b, false);
    }
    const double w = is_steiner(a) || is_steiner(b) ? 0.0 : weight_[a][b];
    const bool steiner_ok = (!is_steiner(a) || deg_[a] + open_[a] >= 3) && (!is_steiner(b) || deg_[b] + open_[b] >= 3);
    if (steiner_ok && (!best_ || base_ + penalty_ + w <= *best_ + kTie)) {
      penalty_ += w;
      visit(idx + 1);
      penalty_ -= w;
    }
    ++open_[a];
    ++open_[b];
  }

  void set(int a, int b, bool on) {
    const Mask ma = Mask{1} << a;
    const Mask mb = Mask{1} << b;
    if (on) {
      adj_[a] |= mb;
      adj_[b] |= ma;
      ++deg_[a];
      ++deg_[b];
    } else {
      adj_[a] &= ~mb;
      adj_[b] &= ~ma;
      --deg_[a];
      --deg_[b];
    }
  }

  void evaluate() {
    ++candidates_;
    const double limit = best_ ? *best_ + kTie : std::numeric_limits<double>::infinity();
    double cost = 0.0;
    for (int u = 0; u < n_; ++u) {
      Mask want = targets_[u] & ~((Mask{2} << u) - 1);
      if (want == 0) continue;
      Mask seen = Mask{1} << u;
      Mask frontier = seen;
      for (int dist = 1; want != 0; ++dist) {
        Mask next = 0;
        for (Mask f = frontier; f != 0; f &= f - 1) next |= adj_[std::countr_zero(f)];
        next &= ~seen;
        if (next == 0) return;  // a demand pair is disconnected
        for (Mask hit = next & want; hit != 0; hit &= hit - 1) cost += weight_[u][std::countr_zero(hit)] * dist;
        want &= ~next;
        seen |= next;
        frontier = next;
      }
      if (cost > limit) return;
    }
    if (best_ && cost > *best_ - kTie) {
      if (cost > *best_ + kTie || !found_) return;
      if (!(current_edges() < best_edges_)) return;
    }
    best_ = cost;
    best_edges_ = current_edges();
    found_ = true;
  }

  std::vector<std::pair<int, int>> current_edges() const {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (chosen_[i]) edges.push_back(pairs_[i]);
    }
    std::sort(edges.begin(), edges.end());
    return edges;
  }

  int n_;
  int total_;
  int delta_;
  std::array<std::array<double, kOracleMaxNodes>, kOracleMaxNodes> weight_{};
  std::array<Mask, kOracleMaxNodes> targets_{};
  std::array<Mask, kOracleMaxNodes> adj_{};
  std::array<int, kOracleMaxNodes> deg_{};
  std::array<int, kOracleMaxNodes> open_{};
  std::vector<std::pair<int, int>> pairs_;
  std::vector<char> chosen_;
  double base_ = 0.0;
  double penalty_ = 0.0;
  std::optional<double> best_;
  std::vector<std::pair<int, int>> best_edges_;
  bool found_ = false;
  std::uint64_t candidates_ = 0;
};

}  // namespace

OracleResult optimal_host(const DemandGraph& g, int delta) { return optimal_host_steiner(g, delta, 0); }

OracleResult optimal_host_steiner(const DemandGraph& g, int delta, std::size_t max_steiner) {
  if (g.node_count() + max_steiner > kOracleMaxNodes) throw Error("instance too large for oracle");
  if (delta < 0) throw Error("degree bound must be nonnegative");
  std::optional<OracleResult> best;
  std::uint64_t candidates = 0;
  // A Steiner node needs degree at least 3 to be useful.
  const std::size_t steiner_limit = delta >= 3 ? max_steiner : 0;
  for (std::size_t s = 0; s <= steiner_limit; ++s) {
    Search search(g, delta, s, best ? std::optional<double>(best->epl) : std::nullopt);
    search.run();
    candidates += search.candidates();
    if (!search.best()) continue;
    best = OracleResult{search.host(), *search.best(), 0};
  }
  if (!best) throw Error("no host within degree bound " + std::to_string(delta) + " connects every demand pair");
  best->candidates = candidates;
  return std::move(*best);
}

}  // namespace dan
