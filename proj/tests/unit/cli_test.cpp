#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "td13/io.hpp"

namespace td13::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("td13_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  static std::string read(const std::string& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

TEST_F(CliTest, DrawTriangle) {
  const auto g = write("tri.json", R"({"n": 3, "outer_order": [0, 1, 2], "edges": [[0, 1], [1, 2], [0, 2]]})");
  const auto r = run_cli({"draw", g, "--out", path("tri")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto svg = read(path("tri.svg"));
  EXPECT_EQ(count(svg, "<line"), 3u);
  EXPECT_EQ(count(svg, "<text"), 2u);
  EXPECT_EQ(run_cli({"verify", path("tri.json")}).code, 0);
}

TEST_F(CliTest, KeepAugmented) {
  const auto g = write("hex.json", R"({"n": 6, "outer_order": [0, 1, 2, 3, 4, 5],
    "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 0]]})");
  ASSERT_EQ(run_cli({"draw", g, "--out", path("plain")}).code, 0);
  ASSERT_EQ(run_cli({"draw", g, "--keep-augmented", "--out", path("full")}).code, 0);
  EXPECT_EQ(count(read(path("plain.svg")), "<line"), 6u);
  EXPECT_EQ(count(read(path("full.svg")), "<line"), 9u);
}

TEST_F(CliTest, MalformedGraph) {
  const auto r = run_cli({"draw", write("bad.json", "{ not json"), "--out", path("x")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST_F(CliTest, CrossingChordsIsInputError) {
  const auto g = write("sq.json", R"({"n": 4, "outer_order": [0, 1, 2, 3], "edges": [[0, 2], [1, 3]]})");
  EXPECT_EQ(run_cli({"draw", g, "--out", path("sq")}).code, 2);
}

TEST_F(CliTest, VerifyCatchesCorruption) {
  const auto g = write("tri.json", R"({"n": 3, "outer_order": [0, 1, 2], "edges": [[0, 1], [1, 2], [0, 2]]})");
  ASSERT_EQ(run_cli({"draw", g, "--out", path("tri")}).code, 0);
  Drawing d = drawing_from_json(read(path("tri.json")));
  d.coords[1] += std::complex<double>(0.01, 0);
  const auto r = run_cli({"verify", write("bad.json", drawing_to_json(d))});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.out.find("1 (01)"), std::string::npos);
}

TEST_F(CliTest, VerifyCatchesInjectedLengths) {
  ASSERT_EQ(run_cli({"draw", "--tstar-depth", "2", "--out", path("t")}).code, 0);
  Drawing d = drawing_from_json(read(path("t.json")));
  // 14 extra chords between non-adjacent vertices.
  for (std::size_t i = 0; i < 14; ++i) d.edges.emplace_back(0, 3 + i % (d.coords.size() - 3));
  const auto r = run_cli({"verify", write("inj.json", drawing_to_json(d))});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.out.find("unexpected_length"), std::string::npos);
}

TEST_F(CliTest, RetryBudgetExitCode) {
  // At seed 1 a depth-6 vertex falls inside a diagonal it is collinear with.
  const auto r = run_cli({"draw", "--tstar-depth", "6", "--seed", "1", "--retries", "1", "--out",
                          path("d")});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("vertex_edge_gap"), std::string::npos);
}

TEST_F(CliTest, EnumerateRows) {
  const auto r = run_cli({"enumerate", "--depth", "6"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1\t((),())\tno\t0,0,0\t0\t01\t010\t0101\t"), std::string::npos);
  EXPECT_NE(r.out.find("111210\t((2,1),(1,0))\tyes\t"), std::string::npos);
  EXPECT_EQ(count(r.out, "\n"), 1u + 364u);
}

TEST_F(CliTest, SelftestShallow) {
  const auto r = run_cli({"selftest", "--depth", "0"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("all suites pass"), std::string::npos);
}

TEST_F(CliTest, SelftestLiteralMissesGoldens) {
  const auto r = run_cli({"selftest", "--depth", "2", "--s-convention", "literal"});
  EXPECT_EQ(r.code, 5);
  EXPECT_NE(r.out.find("goldens       FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("oracle        PASS"), std::string::npos);
}

TEST_F(CliTest, CertifyExitCodes) {
  EXPECT_EQ(run_cli({"certify", "--depth", "3"}).code, 0);
  EXPECT_EQ(run_cli({"certify", "--depth", "4"}).code, 4);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"draw", "--seed", "abc"}).code, 2);
  EXPECT_EQ(run_cli({"enumerate", "--depth", "99"}).code, 2);
  EXPECT_EQ(run_cli({"draw", "--tstar-depth", "2", "--s-convention", "bogus", "--out", path("z")}).code, 2);
}

}  // namespace
}  // namespace td13::cli
