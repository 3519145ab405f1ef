#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include "dan/io.hpp"

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string command = std::string(DAN_CLI_PATH) + " " + args + " 2>&1";
  CliRun result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("dan_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

constexpr const char* kStar4 = "dan-demand v1\n5 4\n0 1 1\n0 2 1\n0 3 1\n0 4 1\n";

TEST_F(Cli, DesignAndEvalStar) {
  const std::string dem = write("s4.dem", kStar4);
  const CliRun d = run("design " + dem + " --alg sni --delta 3 -o " + path("s4.host"));
  ASSERT_EQ(d.code, 0) << d.out;
  EXPECT_EQ(dan::read_host_file(path("s4.host")).node_count(), 7u);
  const CliRun e = run("eval " + dem + " " + path("s4.host"));
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, "epl=2.0 maxdeg=3 steiner=2\n");
}

TEST_F(Cli, ThresholdIgnoresDelta) {
  const std::string dem = write("s4.dem", kStar4);
  const CliRun r = run("design " + dem + " --alg tb --delta 3 -o " + path("h"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("warning"), std::string::npos) << r.out;
}

TEST_F(Cli, ExitCodes) {
  const std::string dem = write("s4.dem", kStar4);
  EXPECT_EQ(run("design " + dem + " --alg ged --delta 3 -o " + path("h")).code, 2);
  EXPECT_EQ(run("design " + dem + " --alg nope --delta 3 -o " + path("h")).code, 1);
  EXPECT_EQ(run("design " + dem + " --alg sni --delta 2 -o " + path("h")).code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("eval " + dem + " " + path("missing.host")).code, 1);
}

TEST_F(Cli, IngestAndStats) {
  const std::string trace = write("t.txt", "a b\nb a\nb c\nc c\n");
  const CliRun i = run("ingest " + trace + " -o " + path("t.dem") + " --labels " + path("t.labels"));
  ASSERT_EQ(i.code, 0) << i.out;
  const CliRun s = run("stats " + path("t.dem"));
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(s.out.substr(0, s.out.find('\n')), "n,m,min_degree,avg_degree,max_degree,entropy,cond_entropy");
  EXPECT_EQ(s.out.substr(s.out.find('\n') + 1, 11), "3,2,1,1.333");
  std::ifstream labels(path("t.labels"));
  std::string first;
  std::getline(labels, first);
  EXPECT_EQ(first, "0 a");
}

TEST_F(Cli, LowerBoundAndOracle) {
  const std::string dem = write("s4.dem", kStar4);
  const CliRun lb = run("lower-bound " + dem + " --delta 3");
  EXPECT_EQ(lb.code, 0);
  EXPECT_EQ(lb.out, "1.0\n");
  const CliRun o = run("oracle " + dem + " --delta 2");
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out.substr(0, 8), "epl=1.5 ");
}

TEST_F(Cli, GenHard) {
  const std::string k4 = write("k4.txt", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  const CliRun vc = run("gen-hard vc --graph " + k4 + " --k 3 --delta 3 -o " + path("vc"));
  ASSERT_EQ(vc.code, 0) << vc.out;
  EXPECT_TRUE(fs::exists(path("vc.dem")));
  EXPECT_TRUE(fs::exists(path("vc.meta")));
  const CliRun gadget = run("gen-hard gadget --d 5 -o " + path("g"));
  EXPECT_EQ(gadget.code, 0);
  EXPECT_EQ(run("gen-hard gadget --d 4 -o " + path("g")).code, 1);
  const std::string p3 = write("p3.txt", "0 1\n1 2\n");
  const CliRun ca = run("gen-hard ca --graph " + p3 + " --K 2 -o " + path("ca"));
  EXPECT_EQ(ca.code, 0);
  EXPECT_NE(ca.out.find("K=80"), std::string::npos);
}

TEST_F(Cli, BenchIsReproducible) {
  write("s4.dem", kStar4);
  const std::string cfg = write("grid.cfg", "instances=s4.dem\nalgorithms=sni,rtree,ges\ndeltas=3,4\nrepetitions=2\n");
  ASSERT_EQ(run("bench " + cfg + " -o " + path("a.csv") + " --aggregate " + path("agg.csv")).code, 0);
  ASSERT_EQ(run("bench " + cfg + " -o " + path("b.csv")).code, 0);
  std::ifstream a(path("a.csv"));
  std::ifstream b(path("b.csv"));
  const std::string ta((std::istreambuf_iterator<char>(a)), {});
  const std::string tb((std::istreambuf_iterator<char>(b)), {});
  EXPECT_EQ(ta, tb);
  EXPECT_EQ(std::count(ta.begin(), ta.end(), '\n'), 13);
  std::ifstream agg(path("agg.csv"));
  std::string header;
  std::getline(agg, header);
  EXPECT_EQ(header, "alg,delta,mean_epl,ok_runs,failed_runs");
}

}  // namespace
