#include <gtest/gtest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path &p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Result run(const std::string &args) {
  auto dir = std::filesystem::temp_directory_path();
  auto out = dir / ("svc_cli_out_" + std::to_string(::getpid()));
  auto err = dir / ("svc_cli_err_" + std::to_string(::getpid()));
  std::string cmd = std::string(SVC_CLI_PATH) + " " + args + " >" + out.string() +
                    " 2>" + err.string();
  int status = std::system(cmd.c_str());
  Result r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  std::filesystem::remove(out);
  std::filesystem::remove(err);
  return r;
}

}  // namespace

TEST(Cli, SupernormalVerdicts) {
  Result no = run("check supernormal --fixture hilbert3d");
  EXPECT_EQ(no.code, 1) << no.err;
  auto j = nlohmann::json::parse(no.out);
  EXPECT_EQ(j["supernormal"], false);
  EXPECT_EQ(j["witness"]["point"], nlohmann::json::parse("[1,2,2]"));
  EXPECT_EQ(run("check supernormal --fixture hilbert3d+").code, 0);
  EXPECT_EQ(run("check supernormal --fixture hilbert3d+ --method triangulations").code, 0);
  EXPECT_EQ(run("check supernormal --matrix '1 2 3'").code, 0);
}

TEST(Cli, NormalAndTight) {
  EXPECT_EQ(run("check normal --matrix '-2 3'").code, 0);
  EXPECT_EQ(run("check normal --matrix '1 2@-2 3'").code, 0);
  EXPECT_EQ(run("check normal --matrix '1 1@0 2'").code, 1);
  EXPECT_EQ(run("check tight --fixture b_neg2_3 --c '1 1'").code, 1);
  EXPECT_EQ(run("check tight --fixture b_neg2_3 --c '2 3'").code, 0);
  EXPECT_EQ(run("check tdi --fixture hilbert3d+ --c '0 0 0 0 0 0 0'").code, 0);
}

TEST(Cli, Errors) {
  Result bad = run("check normal --matrix '1 x'");
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("error: "), std::string::npos);
  EXPECT_EQ(run("check normal").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("fixtures show nothing").code, 2);
  EXPECT_EQ(run("check tight --fixture planar").code, 2);
}

TEST(Cli, SizeGuard) {
  Result big = run("polygon mu --rect 20 10");
  EXPECT_EQ(big.code, 2);
  EXPECT_NE(big.err.find("TooManyPoints"), std::string::npos) << big.err;
}

TEST(Cli, PolygonCensusJson) {
  Result r = run("polygon chambers --rect 2 1");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["mu"], 4);
  EXPECT_EQ(j["faces_by_edges"]["3"], 14);
  EXPECT_EQ(j["faces_by_edges"]["4"], 2);
  EXPECT_EQ(run("polygon mu --vertices '1 0, 0 1, 2 3, 3 1'").out, "5\n");
}

TEST(Cli, DeterministicOutput) {
  for (const char *args : {"triangulations --fixture rect61", "chambers --fixture rect61",
                           "gb --fixture quad51 --omega '0 0 0 0 1 4 1 0' --json", "hilbert --fixture hilbert3d",
                           "fixtures list", "polygon svg --rect 3 2"}) {
    Result a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << args << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty()) << args;
  }
}

TEST(Cli, Triangulations) {
  Result r = run("triangulations --fixture rect61");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out).size(), 14u);
  Result u = run("triangulations --fixture rect61 --uses-all");
  EXPECT_EQ(nlohmann::json::parse(u.out).size(), 6u);
}

TEST(Cli, GroebnerText) {
  Result r = run("gb --fixture b_neg2_3 --w 1");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "x2^3 - x1^2  [flippable]\n");
}

TEST(Cli, MatrixFormatsAgree) {
  auto dir = std::filesystem::temp_directory_path();
  auto path = dir / ("svc_cli_matrix_" + std::to_string(::getpid()));
  {
    std::ofstream f(path);
    f << "2 4\n1 0 1 1\n0 1 1 2\n";
  }
  Result a = run("hilbert --file " + path.string());
  Result b = run("hilbert --matrix '1 0 1 1@0 1 1 2'");
  Result c = run("hilbert --matrix '{\"rows\":[[1,0,1,1],[0,1,1,2]]}'");
  std::filesystem::remove(path);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST(Cli, VirtualSummary) {
  Result r = run("virtual --fixture rect61 --chambers");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(r.out.empty());
}
