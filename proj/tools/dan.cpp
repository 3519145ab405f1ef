#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dan/bench.hpp"
#include "dan/demand_graph.hpp"
#include "dan/design.hpp"
#include "dan/error.hpp"
#include "dan/evaluator.hpp"
#include "dan/hardness.hpp"
#include "dan/io.hpp"
#include "dan/oracle.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kAlgorithmFailure = 2;

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw dan::Error("cannot write " + path);
  return out;
}

// Edge list: one "u v" or "u v w" per line, '#' comments. n is one past the
// largest id unless given.
struct EdgeList {
  dan::SimpleGraph graph;
  std::vector<std::int64_t> weights;
};

EdgeList read_edge_list(const std::string& path, std::optional<std::size_t> n) {
  std::ifstream in(path);
  if (!in) throw dan::Error("cannot open " + path);
  EdgeList list;
  std::string line;
  std::size_t number = 0;
  std::size_t max_id = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long u = -1;
    long long v = -1;
    long long w = 1;
    if (!(fields >> u >> v) || u < 0 || v < 0) {
      throw dan::Error(path + " line " + std::to_string(number) + ": expected 'u v [w]'");
    }
    if (!(fields >> w)) w = 1;
    list.graph.edges.emplace_back(static_cast<dan::NodeId>(u), static_cast<dan::NodeId>(v));
    list.weights.push_back(w);
    max_id = std::max<std::size_t>(max_id, static_cast<std::size_t>(std::max(u, v)));
  }
  list.graph.n = n ? *n : (list.graph.edges.empty() ? 0 : max_id + 1);
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Design bounded-degree demand-aware host graphs"};
  app.require_subcommand(1);
  int code = kOk;

  // ingest
  std::string trace_path;
  std::string demand_out;
  std::string labels_out;
  std::string trace_format = "pairs";
  auto* ingest = app.add_subcommand("ingest", "Aggregate a communication trace into a demand file");
  ingest->add_option("trace", trace_path, "Trace file")->required()->check(CLI::ExistingFile);
  ingest->add_option("-o,--output", demand_out, "Demand file to write")->required();
  ingest->add_option("--labels", labels_out, "Write the node label map here");
  ingest->add_option("--format", trace_format, "pairs or timestamped")
      ->check(CLI::IsMember({"pairs", "timestamped"}));
  ingest->callback([&] {
    std::ifstream in(trace_path);
    const auto result =
        dan::parse_trace(in, trace_format == "pairs" ? dan::TraceFormat::pairs : dan::TraceFormat::timestamped);
    dan::write_demand_file(demand_out, result.graph);
    if (!labels_out.empty()) {
      auto out = open_output(labels_out);
      dan::write_labels(out, result.labels);
    }
    std::cout << "nodes=" << result.graph.node_count() << " edges=" << result.graph.edge_count()
              << " records=" << result.records << " self_loops_dropped=" << result.self_loops_dropped << '\n';
  });

  // stats
  std::string demand_path;
  auto* stats = app.add_subcommand("stats", "Print degree and entropy statistics of a demand file");
  stats->add_option("demand", demand_path, "Demand file")->required()->check(CLI::ExistingFile);
  stats->callback([&] {
    const auto s = dan::degree_stats(dan::read_demand_file(demand_path));
    std::cout << "n,m,min_degree,avg_degree,max_degree,entropy,cond_entropy\n"
              << s.n << ',' << s.m << ',' << s.min_degree << ',' << dan::format_double(s.avg_degree()) << ','
              << s.max_degree << ',' << dan::format_double(s.entropy) << ',' << dan::format_double(s.cond_entropy)
              << '\n';
  });

  // design
  std::string alg_tag;
  std::optional<int> delta;
  std::uint64_t seed = 0;
  std::string host_out;
  bool densify = false;
  int light_degree = 3;
  auto* design = app.add_subcommand("design", "Build a host graph for a demand file");
  design->add_option("demand", demand_path, "Demand file")->required()->check(CLI::ExistingFile);
  design->add_option("--alg", alg_tag, "sni, db, tb, fixed, rtree, rgraph, ges, ged or hed")->required();
  design->add_option("--delta", delta, "Degree bound");
  design->add_option("--seed", seed, "Seed for randomized algorithms");
  design->add_option("-o,--output", host_out, "Host file to write")->required();
  design->add_flag("--densify", densify, "fixed: fill spare degree with random edges");
  design->add_option("--light-degree", light_degree, "fixed: degree of the light overlay");
  design->callback([&] {
    const dan::Algorithm algorithm = dan::parse_algorithm(alg_tag);
    if (!dan::takes_degree_bound(algorithm)) {
      if (delta) std::cerr << "warning: " << alg_tag << " chooses its own degree bound; --delta ignored\n";
      delta = 0;
    } else if (!delta) {
      throw CLI::RequiredError("--delta");
    }
    dan::DesignOptions options;
    options.fixed.densify = densify;
    options.fixed.light_degree = light_degree;
    const auto result = dan::design(dan::read_demand_file(demand_path), algorithm, *delta, seed, options);
    dan::write_host_file(host_out, result.host);
    std::cout << "epl=" << (result.epl.is_finite() ? dan::format_double(result.epl.value()) : "inf")
              << " maxdeg=" << result.max_degree << " steiner=" << result.steiner
              << " runtime_ms=" << dan::format_double(result.runtime_ms) << '\n';
    if (!result.ok()) {
      std::cerr << alg_tag << " failed: " << *result.failure << '\n';
      code = kAlgorithmFailure;
    }
  });

  // eval
  std::string host_path;
  auto* eval = app.add_subcommand("eval", "Expected path length of a host for a demand file");
  eval->add_option("demand", demand_path, "Demand file")->required()->check(CLI::ExistingFile);
  eval->add_option("host", host_path, "Host file")->required()->check(CLI::ExistingFile);
  eval->callback([&] {
    const auto g = dan::read_demand_file(demand_path);
    const auto host = dan::read_host_file(host_path);
    const auto epl = dan::expected_path_length(g, host);
    std::cout << "epl=" << (epl.is_finite() ? dan::format_double(epl.value()) : "inf")
              << " maxdeg=" << host.max_degree() << " steiner=" << host.steiner_count() << '\n';
  });

  // lower-bound
  int bound_delta = 0;
  auto* lower = app.add_subcommand("lower-bound", "Entropy lower bound on the expected path length");
  lower->add_option("demand", demand_path, "Demand file")->required()->check(CLI::ExistingFile);
  lower->add_option("--delta", bound_delta, "Degree bound")->required();
  lower->callback([&] {
    std::cout << dan::format_double(dan::epl_lower_bound(dan::read_demand_file(demand_path), bound_delta)) << '\n';
  });

  // oracle
  int oracle_delta = 0;
  std::size_t max_steiner = 0;
  std::string oracle_out;
  auto* oracle = app.add_subcommand("oracle", "Exact optimum for instances of at most 7 nodes");
  oracle->add_option("demand", demand_path, "Demand file")->required()->check(CLI::ExistingFile);
  oracle->add_option("--delta", oracle_delta, "Degree bound")->required();
  oracle->add_option("--max-steiner", max_steiner, "Allow up to this many Steiner nodes");
  oracle->add_option("-o,--output", oracle_out, "Write the optimal host here");
  oracle->callback([&] {
    const auto result = dan::optimal_host_steiner(dan::read_demand_file(demand_path), oracle_delta, max_steiner);
    if (!oracle_out.empty()) dan::write_host_file(oracle_out, result.host);
    std::cout << "epl=" << dan::format_double(result.epl) << " steiner=" << result.host.steiner_count()
              << " candidates=" << result.candidates << '\n';
  });

  // gen-hard
  std::string kind;
  std::string graph_path;
  std::optional<std::size_t> graph_n;
  std::size_t cover_k = 0;
  int hard_delta = 3;
  int gadget_d = 3;
  std::int64_t threshold = 0;
  std::string prefix;
  auto* gen = app.add_subcommand("gen-hard", "Write structured hard instances");
  gen->add_option("kind", kind, "vc (vertex cover), ca (circular arrangement) or gadget")
      ->required()
      ->check(CLI::IsMember({"vc", "ca", "gadget"}));
  gen->add_option("--graph", graph_path, "Input edge list, one 'u v [w]' per line");
  gen->add_option("--n", graph_n, "Node count of the input graph");
  gen->add_option("--k", cover_k, "vc: cover size");
  gen->add_option("--delta", hard_delta, "vc: degree bound");
  gen->add_option("--K", threshold, "ca: arrangement cost threshold");
  gen->add_option("--d", gadget_d, "gadget: odd degree");
  gen->add_option("-o,--output", prefix, "Output prefix (.dem and .meta are appended)")->required();
  gen->callback([&] {
    if (kind == "gadget") {
      const auto gadget = dan::degree_blocking_gadget(gadget_d);
      auto out = open_output(prefix + ".edges");
      out << "# port " << gadget.port << '\n';
      for (const auto& [u, v] : gadget.graph.edges) out << u << ' ' << v << '\n';
      std::cout << "nodes=" << gadget.graph.n << " edges=" << gadget.graph.edges.size() << " port=" << gadget.port
                << '\n';
      return;
    }
    if (graph_path.empty()) throw CLI::RequiredError("--graph");
    const EdgeList input = read_edge_list(graph_path, graph_n);
    const dan::HardnessInstance inst = kind == "vc"
                                           ? dan::vertex_cover_reduction(input.graph, cover_k, hard_delta)
                                           : dan::circular_arrangement_connectify(input.graph, input.weights, threshold);
    auto demand = open_output(prefix + ".dem");
    dan::write_integer_demand(demand, inst);
    auto meta = open_output(prefix + ".meta");
    dan::write_hardness_metadata(meta, inst);
    std::cout << "nodes=" << inst.n << " demands=" << inst.demands.size() << " K=" << inst.K << '\n';
  });

  // bench
  std::string config_path;
  std::string csv_out;
  std::string aggregate_out;
  auto* bench = app.add_subcommand("bench", "Run a benchmark grid and write CSV results");
  bench->add_option("config", config_path, "Config file")->required()->check(CLI::ExistingFile);
  bench->add_option("-o,--output", csv_out, "Per-run CSV")->required();
  bench->add_option("--aggregate", aggregate_out, "Per (algorithm, delta) mean CSV");
  bench->callback([&] {
    std::ifstream in(config_path);
    const auto config = dan::parse_bench_config(in, std::filesystem::path(config_path).parent_path());
    const auto rows = dan::run_bench(config);
    auto out = open_output(csv_out);
    dan::write_bench_csv(out, rows);
    if (!aggregate_out.empty()) {
      auto agg = open_output(aggregate_out);
      dan::write_aggregate_csv(agg, rows);
    }
    std::cout << "rows=" << rows.size() << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? kOk : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return code;
}
