#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "dan/demand_graph.hpp"
#include "dan/hardness.hpp"
#include "dan/host_graph.hpp"

namespace dan {

// Shortest decimal text that reads back to the same double, always with a
// decimal point or exponent ("2.0", "0.1", "1e-20"). Infinity prints "inf".
std::string format_double(double x);

enum class TraceFormat {
  pairs,        // src dst
  timestamped,  // src dst timestamp (timestamp ignored)
};

struct TraceResult {
  DemandGraph graph;
  // labels[id] is the trace label of node id, in order of first appearance.
  std::vector<std::string> labels;
  std::size_t self_loops_dropped = 0;
  std::size_t records = 0;
};

// Aggregates a communication trace into a demand graph. Fields are separated
// by whitespace or commas; blank lines and lines starting with '#' are
// skipped. Both directions of a pair count towards the same undirected edge.
// Self-communications are counted and dropped; their labels are not indexed
// unless they also appear in a regular record. Throws on malformed records
// (with the line number) and when nothing remains.
TraceResult parse_trace(std::istream& in, TraceFormat format);

// "dan-demand v1" / "n m" / m lines "u v w" with u < v < n and w > 0. The
// weights are normalized on reading.
DemandGraph read_demand(std::istream& in);
void write_demand(std::ostream& out, const DemandGraph& g);

// "dan-host v1" / "n_total n_original delta" / one line "u v" per edge.
HostGraph read_host(std::istream& in);
void write_host(std::ostream& out, const HostGraph& host);

// One line "id label" per node.
void write_labels(std::ostream& out, const std::vector<std::string>& labels);

// Demand file with the integer weights of the instance, and a key=value
// sidecar with K, W, M, b and the node roles.
void write_integer_demand(std::ostream& out, const HardnessInstance& inst);
void write_hardness_metadata(std::ostream& out, const HardnessInstance& inst);

// File wrappers; throw when the file cannot be opened.
DemandGraph read_demand_file(const std::filesystem::path& path);
HostGraph read_host_file(const std::filesystem::path& path);
void write_host_file(const std::filesystem::path& path, const HostGraph& host);
void write_demand_file(const std::filesystem::path& path, const DemandGraph& g);

}  // namespace dan
