#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "dan/error.hpp"
#include "dan/hardness.hpp"
#include "dan/io.hpp"
#include "dan/sni.hpp"

namespace dan {
namespace {

TraceResult parse(const std::string& text, TraceFormat format = TraceFormat::pairs) {
  std::istringstream in(text);
  return parse_trace(in, format);
}

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(Trace, Examples) {
  const TraceResult a = parse("0 1\n0 1\n1 2\n");
  EXPECT_EQ(a.graph.node_count(), 3u);
  EXPECT_NEAR(a.graph.weight(0, 1), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(a.graph.weight(1, 2), 1.0 / 3.0, 1e-15);

  const TraceResult b = parse("0 1\n1 0\n");
  EXPECT_EQ(b.graph.edge_count(), 1u);
  EXPECT_DOUBLE_EQ(b.graph.weight(0, 1), 1.0);

  EXPECT_EQ(error_of([] { parse("0 0\n"); }), "empty trace");
  EXPECT_EQ(error_of([] { parse("# nothing\n\n"); }), "empty trace");
}

TEST(Trace, LabelsAndFormats) {
  const TraceResult r = parse("# header\nhostB,hostA,17\nhostA hostC 18\nhostC hostC 19\n", TraceFormat::timestamped);
  EXPECT_EQ(r.labels, (std::vector<std::string>{"hostB", "hostA", "hostC"}));
  EXPECT_EQ(r.self_loops_dropped, 1u);
  EXPECT_EQ(r.records, 3u);
  EXPECT_DOUBLE_EQ(r.graph.weight(0, 1), 0.5);
  EXPECT_DOUBLE_EQ(r.graph.weight(1, 2), 0.5);

  const TraceResult loop_only = parse("x x\na b\n");
  EXPECT_EQ(loop_only.labels, (std::vector<std::string>{"a", "b"}));
}

TEST(Trace, MalformedRecordReportsLine) {
  const std::string message = error_of([] { parse("0 1\n0 1 2\n"); });
  EXPECT_NE(message.find("line 2"), std::string::npos) << message;
  EXPECT_NE(error_of([] { parse("0 1 5\n0\n", TraceFormat::timestamped); }).find("line 2"), std::string::npos);
}

TEST(Trace, OrderIndependent) {
  Rng rng(81);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::string> lines;
    for (int i = 0; i < 200; ++i) {
      lines.push_back("n" + std::to_string(rng.below(20)) + " n" + std::to_string(rng.below(20)));
    }
    std::string text;
    for (const auto& l : lines) text += l + "\n";
    rng.shuffle(std::span<std::string>(lines));
    std::string shuffled;
    for (const auto& l : lines) shuffled += l + "\n";
    const TraceResult a = parse(text);
    const TraceResult b = parse(shuffled);
    // Ids follow first appearance, so compare by label.
    ASSERT_EQ(a.graph.edge_count(), b.graph.edge_count());
    std::map<std::string, NodeId> id_b;
    for (NodeId v = 0; v < b.labels.size(); ++v) id_b[b.labels[v]] = v;
    for (const DemandEdge& e : a.graph.edges()) {
      EXPECT_EQ(e.weight, b.graph.weight(id_b.at(a.labels[e.u]), id_b.at(a.labels[e.v])));
    }
  }
}

TEST(DemandFile, RoundTrip) {
  for (const DemandGraph& g : testing::random_corpus(1000, 82, 40)) {
    std::stringstream s;
    write_demand(s, g);
    const DemandGraph back = read_demand(s);
    ASSERT_EQ(back.node_count(), g.node_count());
    ASSERT_EQ(back.edge_count(), g.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      EXPECT_EQ(back.edges()[i].u, g.edges()[i].u);
      EXPECT_EQ(back.edges()[i].v, g.edges()[i].v);
      EXPECT_NEAR(back.edges()[i].weight, g.edges()[i].weight, 1e-12);
    }
  }
}

TEST(DemandFile, Errors) {
  auto read = [](const std::string& text) {
    std::istringstream in(text);
    return read_demand(in);
  };
  EXPECT_NE(error_of([&] { read("dan-demand v1\n3 2\n0 1 1\n0 1 2\n"); }).find("duplicate edge"), std::string::npos);
  EXPECT_NE(error_of([&] { read("dan-demand v2\n3 1\n0 1 1\n"); }).find("header"), std::string::npos);
  EXPECT_FALSE(error_of([&] { read("dan-demand v1\n3 1\n0 3 1\n"); }).empty());
  EXPECT_FALSE(error_of([&] { read("dan-demand v1\n3 1\n1 0 1\n"); }).empty());
  EXPECT_FALSE(error_of([&] { read("dan-demand v1\n3 1\n0 1 0\n"); }).empty());
  EXPECT_FALSE(error_of([&] { read("dan-demand v1\n3 2\n0 1 1\n"); }).empty());
  EXPECT_FALSE(error_of([&] { read("dan-demand v1\n3 1\n0 1 1\n1 2 1\n"); }).empty());
  EXPECT_FALSE(error_of([&] { read(""); }).empty());
}

TEST(HostFile, RoundTrip) {
  for (const DemandGraph& g : testing::random_corpus(100, 83, 40)) {
    const HostGraph host = steiner_node_insertion(g, 3).host;
    std::stringstream s;
    write_host(s, host);
    EXPECT_EQ(read_host(s), host);
  }
}

TEST(HostFile, Errors) {
  auto read = [](const std::string& text) {
    std::istringstream in(text);
    return read_host(in);
  };
  EXPECT_NE(error_of([&] { read("dan-host v1\n3 3 2\n0 3\n"); }).find("out of range"), std::string::npos);
  EXPECT_NE(error_of([&] { read("dan-host v1\n3 3 2\n0 1\n1 0\n"); }).find("duplicate edge"), std::string::npos);
  EXPECT_NE(error_of([&] { read("dan-host v1\n3 3 2\n1 1\n"); }).find("self-loop"), std::string::npos);
  EXPECT_FALSE(error_of([&] { read("dan-host v1\n2 3 2\n"); }).empty());
  EXPECT_FALSE(error_of([&] { read("dan-demand v1\n2 2 2\n"); }).empty());
  std::istringstream ok("dan-host v1\n4 3 2\n0 3\n3 1\n");
  const HostGraph h = read_host(ok);
  EXPECT_EQ(h.steiner_count(), 1u);
  EXPECT_EQ(h.delta(), 2);
}

TEST(FormatDouble, Examples) {
  EXPECT_EQ(format_double(2.0), "2.0");
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
  Rng rng(84);
  for (int i = 0; i < 1000; ++i) {
    const double x = testing::unit(rng) * std::pow(10.0, static_cast<double>(rng.below(20)) - 10.0);
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
}

TEST(HardnessFiles, Metadata) {
  const SimpleGraph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  const HardnessInstance inst = vertex_cover_reduction(k4, 3, 3);
  std::stringstream meta;
  write_hardness_metadata(meta, inst);
  EXPECT_NE(meta.str().find("K=" + std::to_string(inst.K) + "\n"), std::string::npos);
  EXPECT_NE(meta.str().find("W=31\n"), std::string::npos);
  std::stringstream dem;
  write_integer_demand(dem, inst);
  const DemandGraph g = read_demand(dem);
  EXPECT_EQ(g.node_count(), inst.n);
  EXPECT_EQ(g.edge_count(), inst.demands.size());
}

}  // namespace
}  // namespace dan
