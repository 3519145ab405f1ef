#include "dan/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string_view>
#include <unordered_map>
#include <utility>

#include "dan/error.hpp"

namespace dan {

namespace {

std::vector<std::string_view> split_fields(std::string_view line, bool commas) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  auto is_sep = [&](char c) { return c == ' ' || c == '\t' || c == '\r' || (commas && c == ','); };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_sep(line[i])) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

bool skippable(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

class Lines {
 public:
  Lines(std::istream& in, std::string what) : in_(in), what_(std::move(what)) {}

  // Next non-blank, non-comment line split on whitespace; false at EOF.
  bool next(std::vector<std::string_view>& fields) {
    while (std::getline(in_, line_)) {
      ++number_;
      if (skippable(line_)) continue;
      fields = split_fields(line_, false);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(what_ + " line " + std::to_string(number_) + ": " + message);
  }

  template <typename T>
  T integer(std::string_view text) const {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) fail("bad integer '" + std::string(text) + "'");
    return value;
  }

  double real(std::string_view text) const {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
      fail("bad number '" + std::string(text) + "'");
    }
    return value;
  }

 private:
  std::istream& in_;
  std::string what_;
  std::string line_;
  std::size_t number_ = 0;
};

void expect_header(Lines& lines, std::vector<std::string_view>& fields, std::string_view magic) {
  if (!lines.next(fields)) lines.fail("missing header");
  const std::string found = fields.size() == 2 ? std::string(fields[0]) + " " + std::string(fields[1]) : "";
  if (found != magic) lines.fail("expected header '" + std::string(magic) + "'");
}

template <typename Stream>
Stream open(const std::filesystem::path& path) {
  Stream stream(path);
  if (!stream) throw Error("cannot open " + path.string());
  return stream;
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, x);
  std::string text(buffer, result.ptr);
  if (text.find_first_of(".en") == std::string::npos) text += ".0";
  return text;
}

TraceResult parse_trace(std::istream& in, TraceFormat format) {
  const std::size_t expected = format == TraceFormat::pairs ? 2 : 3;
  TraceResult result;
  std::unordered_map<std::string, NodeId> ids;
  std::map<std::pair<NodeId, NodeId>, std::uint64_t> counts;
  auto id_of = [&](std::string_view label) {
    const auto [it, inserted] = ids.try_emplace(std::string(label), static_cast<NodeId>(result.labels.size()));
    if (inserted) result.labels.emplace_back(label);
    return it->second;
  };

  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (skippable(line)) continue;
    const auto fields = split_fields(line, true);
    if (fields.size() != expected) {
      throw Error("trace line " + std::to_string(number) + ": expected " + std::to_string(expected) + " fields, got " +
                  std::to_string(fields.size()));
    }
    ++result.records;
    if (fields[0] == fields[1]) {
      ++result.self_loops_dropped;
      continue;
    }
    NodeId u = id_of(fields[0]);
    NodeId v = id_of(fields[1]);
    if (u > v) std::swap(u, v);
    ++counts[{u, v}];
  }
  if (counts.empty()) throw Error("empty trace");

  std::vector<DemandEdge> raw;
  raw.reserve(counts.size());
  for (const auto& [pair, count] : counts) raw.push_back({pair.first, pair.second, static_cast<double>(count)});
  result.graph = normalize(result.labels.size(), raw);
  return result;
}

DemandGraph read_demand(std::istream& in) {
  Lines lines(in, "demand file");
  std::vector<std::string_view> fields;
  expect_header(lines, fields, "dan-demand v1");
  if (!lines.next(fields) || fields.size() != 2) lines.fail("expected 'n m'");
  const auto n = lines.integer<std::size_t>(fields[0]);
  const auto m = lines.integer<std::size_t>(fields[1]);
  std::vector<DemandEdge> raw;
  raw.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!lines.next(fields)) lines.fail("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    if (fields.size() != 3) lines.fail("expected 'u v w'");
    const auto u = lines.integer<NodeId>(fields[0]);
    const auto v = lines.integer<NodeId>(fields[1]);
    const double w = lines.real(fields[2]);
    if (!(u < v)) lines.fail("expected u < v");
    if (v >= n) lines.fail("node " + std::to_string(v) + " out of range");
    if (!(w > 0.0)) lines.fail("weight must be positive");
    raw.push_back({u, v, w});
  }
  if (lines.next(fields)) lines.fail("unexpected content after the last edge");
  return normalize(n, raw);
}

void write_demand(std::ostream& out, const DemandGraph& g) {
  out << "dan-demand v1\n" << g.node_count() << ' ' << g.edge_count() << '\n';
  for (const DemandEdge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << format_double(e.weight) << '\n';
}

HostGraph read_host(std::istream& in) {
  Lines lines(in, "host file");
  std::vector<std::string_view> fields;
  expect_header(lines, fields, "dan-host v1");
  if (!lines.next(fields) || fields.size() != 3) lines.fail("expected 'n_total n_original delta'");
  const auto n_total = lines.integer<std::size_t>(fields[0]);
  const auto n_original = lines.integer<std::size_t>(fields[1]);
  const int delta = lines.integer<int>(fields[2]);
  if (n_original > n_total) lines.fail("n_original exceeds n_total");
  HostGraph host(n_total, n_original, delta);
  while (lines.next(fields)) {
    if (fields.size() != 2) lines.fail("expected 'u v'");
    const auto u = lines.integer<NodeId>(fields[0]);
    const auto v = lines.integer<NodeId>(fields[1]);
    if (u >= n_total || v >= n_total) lines.fail("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
    if (u == v) lines.fail("self-loop at node " + std::to_string(u));
    if (!host.add_edge(u, v)) lines.fail("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  return host;
}

void write_host(std::ostream& out, const HostGraph& host) {
  out << "dan-host v1\n" << host.node_count() << ' ' << host.original_count() << ' ' << host.delta() << '\n';
  for (const auto& [u, v] : host.edges()) out << u << ' ' << v << '\n';
}

void write_labels(std::ostream& out, const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) out << i << ' ' << labels[i] << '\n';
}

void write_integer_demand(std::ostream& out, const HardnessInstance& inst) {
  std::vector<IntegerDemand> sorted = inst.demands;
  for (IntegerDemand& d : sorted) {
    if (d.u > d.v) std::swap(d.u, d.v);
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const IntegerDemand& a, const IntegerDemand& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  out << "dan-demand v1\n" << inst.n << ' ' << sorted.size() << '\n';
  for (const IntegerDemand& d : sorted) out << d.u << ' ' << d.v << ' ' << d.weight << '\n';
}

void write_hardness_metadata(std::ostream& out, const HardnessInstance& inst) {
  out << "n=" << inst.n << '\n'
      << "delta=" << inst.delta << '\n'
      << "K=" << inst.K << '\n'
      << "W=" << inst.W << '\n'
      << "M=" << inst.M << '\n'
      << "b=" << inst.b << '\n'
      << "copies=" << inst.copies << '\n'
      << "copy_offset=" << inst.copy_offset << '\n'
      << "root=" << inst.root << '\n'
      << "selectors=" << join(inst.selectors) << '\n'
      << "vertex_roots=" << join(inst.vertex_roots) << '\n'
      << "terminals=" << join(inst.terminals) << '\n';
}

DemandGraph read_demand_file(const std::filesystem::path& path) {
  auto in = open<std::ifstream>(path);
  return read_demand(in);
}

HostGraph read_host_file(const std::filesystem::path& path) {
  auto in = open<std::ifstream>(path);
  return read_host(in);
}

void write_host_file(const std::filesystem::path& path, const HostGraph& host) {
  auto out = open<std::ofstream>(path);
  write_host(out, host);
  if (!out) throw Error("cannot write " + path.string());
}

void write_demand_file(const std::filesystem::path& path, const DemandGraph& g) {
  auto out = open<std::ofstream>(path);
  write_demand(out, g);
  if (!out) throw Error("cannot write " + path.string());
}

}  // namespace dan
