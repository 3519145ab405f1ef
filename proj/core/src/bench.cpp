#include "dan/bench.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <string_view>
#include <utility>

#include "dan/error.hpp"
#include "dan/io.hpp"

namespace dan {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view value) {
  std::vector<std::string_view> items;
  while (!value.empty()) {
    const auto comma = value.find(',');
    const auto item = trim(value.substr(0, comma));
    if (!item.empty()) items.push_back(item);
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return items;
}

template <typename T>
T parse_integer(std::string_view text, std::size_t line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error("bench config line " + std::to_string(line) + ": bad integer '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

BenchConfig parse_bench_config(std::istream& in, const std::filesystem::path& base_dir) {
  BenchConfig config;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw Error("bench config line " + std::to_string(number) + ": expected key=value");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "instances") {
      for (auto item : split_list(value)) {
        std::filesystem::path path(item);
        config.instances.push_back(path.is_relative() && !base_dir.empty() ? base_dir / path : path);
      }
    } else if (key == "algorithms") {
      for (auto item : split_list(value)) config.algorithms.push_back(parse_algorithm(item));
    } else if (key == "deltas") {
      for (auto item : split_list(value)) config.deltas.push_back(parse_integer<int>(item, number));
    } else if (key == "repetitions") {
      config.repetitions = parse_integer<int>(value, number);
      if (config.repetitions < 1) throw Error("bench config: repetitions must be positive");
    } else if (key == "base_seed") {
      config.base_seed = parse_integer<std::uint64_t>(value, number);
    } else if (key == "timing") {
      if (value != "true" && value != "false") throw Error("bench config: timing must be true or false");
      config.timing = value == "true";
    } else {
      throw Error("bench config line " + std::to_string(number) + ": unknown key '" + std::string(key) + "'");
    }
  }
  if (config.instances.empty()) throw Error("bench config: no instances");
  if (config.algorithms.empty()) throw Error("bench config: no algorithms");
  if (config.deltas.empty()) throw Error("bench config: no deltas");
  return config;
}

std::vector<BenchRow> run_bench(std::span<const NamedInstance> instances, const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (const NamedInstance& instance : instances) {
    for (Algorithm algorithm : config.algorithms) {
      for (int delta : config.deltas) {
        for (int rep = 0; rep < config.repetitions; ++rep) {
          const std::uint64_t seed = config.base_seed + static_cast<std::uint64_t>(rep);
          BenchRow row;
          row.instance = instance.name;
          row.algorithm = algorithm;
          row.delta = delta;
          if (is_randomized(algorithm)) row.seed = seed;
          try {
            const DesignResult result = design(instance.graph, algorithm, delta, seed);
            row.status = !result.ok() ? "FAILED" : result.epl.is_infinite() ? "INF" : "ok";
            if (row.status == "ok") row.epl = result.epl.value();
            row.max_degree = result.max_degree;
            row.n_total = result.host.node_count();
            row.steiner = result.steiner;
            if (config.timing) row.runtime_ms = result.runtime_ms;
          } catch (const Error&) {
            row.status = "FAILED";
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<NamedInstance> instances;
  for (const auto& path : config.instances) instances.push_back({path.string(), read_demand_file(path)});
  return run_bench(instances, config);
}

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows) {
  out << "instance,alg,delta,seed,status,epl,maxdeg,n_total,steiner,runtime_ms\n";
  for (const BenchRow& row : rows) {
    out << row.instance << ',' << algorithm_tag(row.algorithm) << ',' << row.delta << ',';
    if (row.seed) out << *row.seed;
    out << ',' << row.status << ',';
    if (row.epl) out << format_double(*row.epl);
    out << ',' << row.max_degree << ',' << row.n_total << ',' << row.steiner << ',';
    if (row.runtime_ms) out << format_double(*row.runtime_ms);
    out << '\n';
  }
}

void write_aggregate_csv(std::ostream& out, std::span<const BenchRow> rows) {
  struct Cell {
    // Per instance: sum and count of ok EPLs, in order of first appearance.
    std::vector<std::pair<std::string, std::pair<double, std::size_t>>> per_instance;
    std::size_t ok = 0;
    std::size_t failed = 0;
  };
  std::vector<std::pair<Algorithm, int>> order;
  std::map<std::pair<Algorithm, int>, Cell> cells;
  for (const BenchRow& row : rows) {
    const auto key = std::make_pair(row.algorithm, row.delta);
    auto [it, inserted] = cells.try_emplace(key);
    if (inserted) order.push_back(key);
    Cell& cell = it->second;
    if (!row.epl) {
      ++cell.failed;
      continue;
    }
    ++cell.ok;
    auto slot = std::find_if(cell.per_instance.begin(), cell.per_instance.end(),
                             [&](const auto& entry) { return entry.first == row.instance; });
    if (slot == cell.per_instance.end()) {
      cell.per_instance.push_back({row.instance, {0.0, 0}});
      slot = std::prev(cell.per_instance.end());
    }
    slot->second.first += *row.epl;
    ++slot->second.second;
  }

  out << "alg,delta,mean_epl,ok_runs,failed_runs\n";
  for (const auto& key : order) {
    const Cell& cell = cells.at(key);
    out << algorithm_tag(key.first) << ',' << key.second << ',';
    if (!cell.per_instance.empty()) {
      double total = 0.0;
      for (const auto& [name, sum_count] : cell.per_instance) {
        total += sum_count.first / static_cast<double>(sum_count.second);
      }
      out << format_double(total / static_cast<double>(cell.per_instance.size()));
    }
    out << ',' << cell.ok << ',' << cell.failed << '\n';
  }
}

}  // namespace dan
