#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dan/demand_graph.hpp"
#include "dan/design.hpp"

namespace dan {

// Text config, one key=value per line, '#' comments. List values are
// comma-separated and repeated keys append:
//   instances=a.dem,b.dem
//   algorithms=sni,fixed
//   deltas=8,16
//   repetitions=10
//   base_seed=1
//   timing=true
// Relative instance paths are resolved against `base_dir`.
struct BenchConfig {
  std::vector<std::filesystem::path> instances;
  std::vector<Algorithm> algorithms;
  std::vector<int> deltas;
  int repetitions = 1;
  std::uint64_t base_seed = 0;
  // Off by default so that reruns produce identical files.
  bool timing = false;
};
BenchConfig parse_bench_config(std::istream& in, const std::filesystem::path& base_dir = {});

struct NamedInstance {
  std::string name;
  DemandGraph graph;
};

struct BenchRow {
  std::string instance;
  Algorithm algorithm = Algorithm::sni;
  int delta = 0;
  std::optional<std::uint64_t> seed;  // randomized algorithms only
  std::string status;                 // ok, FAILED or INF
  std::optional<double> epl;          // only when status is ok
  std::size_t max_degree = 0;
  std::size_t n_total = 0;
  std::size_t steiner = 0;
  std::optional<double> runtime_ms;
};

// One row per (instance, algorithm, delta, repetition), in config order.
// Repetition i uses seed base_seed + i. An algorithm that rejects its input
// (for example fixed with delta < 6) yields a FAILED row.
std::vector<BenchRow> run_bench(std::span<const NamedInstance> instances, const BenchConfig& config);
// Loads config.instances, named by their path as written in the config.
std::vector<BenchRow> run_bench(const BenchConfig& config);

// instance,alg,delta,seed,status,epl,maxdeg,n_total,steiner,runtime_ms
void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows);

// alg,delta,mean_epl,ok_runs,failed_runs
// mean_epl averages, over instances with at least one ok run, the mean EPL of
// that instance's ok runs; empty when there are none.
void write_aggregate_csv(std::ostream& out, std::span<const BenchRow> rows);

}  // namespace dan
