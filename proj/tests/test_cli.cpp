#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bbc_cli.hpp"

namespace fs = std::filesystem;
using namespace bbc;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "bbc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bbc-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    auto p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const char* kP3 = "p bbc 3 2 2 2\nb 1 2\nb 2 3\n";

}  // namespace

TEST_F(CliTest, RecognizeLowerBoundInstance) {
  auto lb = file("lb.bbc", serialize_instance(gen_lower_bound_family(1)));
  auto r = run({"recognize", lb});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("n=9\n"), std::string::npos);
  EXPECT_NE(r.out.find("chordal=yes\n"), std::string::npos);
  EXPECT_NE(r.out.find("omega=3\n"), std::string::npos);
  EXPECT_NE(r.out.find("interval-restricted=no\n"), std::string::npos);
  EXPECT_NE(r.out.find("H-bipartite=yes\n"), std::string::npos);
}

TEST_F(CliTest, ColourThenVerify) {
  auto inst = file("p3.bbc", kP3);
  auto col = path("p3.col");
  auto r = run({"colour", inst, "--out", col});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("best:"), std::string::npos);
  auto v = run({"verify", inst, col});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "valid span 3\n");
}

TEST_F(CliTest, EveryAlgorithmWritesAValidColouring) {
  GeneratorSpec spec;
  spec.kind = HostKind::interval2;
  spec.length = 5;
  spec.omega = 5;
  spec.backbone = BackboneKind::bipartite;
  spec.seed = 3;
  auto inst = file("i.bbc", serialize_instance(generate(spec)));
  for (std::string alg : {"best", "double", "interval2", "sparse", "exact"}) {
    auto r = run({"colour", inst, "--alg", alg, "--out", path(alg + ".col"), "--csv", path(alg + ".csv")});
    EXPECT_EQ(r.code, 0) << alg << ": " << r.err;
    EXPECT_EQ(run({"verify", inst, path(alg + ".col")}).code, 0) << alg;
    std::ifstream csv(path(alg + ".csv"));
    std::string header;
    std::getline(csv, header);
    EXPECT_EQ(header, report_csv_header());
  }
}

TEST_F(CliTest, RejectedPreconditionExitsTwo) {
  auto lb = file("lb.bbc", serialize_instance(gen_lower_bound_family(1)));
  auto r = run({"colour", lb, "--alg", "interval2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("clique intersection graph not a path"), std::string::npos);
  Graph c4(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto nc = file("c4.bbc", serialize_instance(BackboneInstance(c4, std::vector<Edge>{}, 2)));
  EXPECT_EQ(run({"colour", nc}).code, 2);
}

TEST_F(CliTest, InvalidColouringExitsOne) {
  auto inst = file("p3.bbc", kP3);
  auto col = file("bad.col", "s bbc 3\nv 1 1\nv 2 2\nv 3 3\n");
  auto r = run({"verify", inst, col});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("invalid: 2 violation(s)"), std::string::npos);
  EXPECT_NE(r.out.find("backbone-gap"), std::string::npos);
}

TEST_F(CliTest, ExactLinearAndCircular) {
  auto lb = file("lb.bbc", serialize_instance(gen_lower_bound_family(1)));
  auto r = run({"exact", lb});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("x bbc 5\n", 0), 0u);

  auto p3 = file("p3.bbc", kP3);
  auto out = path("p3.cbc");
  ASSERT_EQ(run({"exact", p3, "--circular", "--out", out}).code, 0);
  auto v = run({"verify", p3, out, "--circular"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "valid span 4\n");
}

TEST_F(CliTest, ExactOutOfBudgetExitsThree) {
  GeneratorSpec spec;
  spec.n = 120;
  spec.omega = 9;
  spec.backbone = BackboneKind::full;
  spec.seed = 8;
  auto inst = file("big.bbc", serialize_instance(generate(spec)));
  auto r = run({"exact", inst, "--budget", "0.000001"});
  if (r.code == 3) {
    EXPECT_NE(r.out.find("c inexact"), std::string::npos);
  }
  else EXPECT_EQ(r.code, 0);
}

TEST_F(CliTest, MadOfBackboneAndHost) {
  auto p4 = file("p4.bbc", "p bbc 4 3 3 2\nb 1 2\nb 2 3\nb 3 4\n");
  auto r = run({"mad", p4});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "mad=3/2");
  auto k3 = file("k3.bbc", "p bbc 3 3 0 2\ne 1 2\ne 2 3\ne 1 3\n");
  EXPECT_EQ(run({"mad", k3}).out.substr(0, 6), "mad=0\n");
  EXPECT_EQ(run({"mad", k3, "--host"}).out.substr(0, 6), "mad=2\n");
}

TEST_F(CliTest, GenerateIsDeterministic) {
  auto a = run({"generate", "--kind", "chordal", "--n", "15", "--omega", "4", "--seed", "9"});
  auto b = run({"generate", "--kind", "chordal", "--n", "15", "--omega", "4", "--seed", "9"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(parse_instance(a.out).vertex_count(), 15);

  auto r = run({"generate", "--count", "3", "--out", path("batch")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(std::distance(fs::directory_iterator(path("batch")), fs::directory_iterator{}), 3);
  EXPECT_EQ(run({"generate", "--count", "3"}).code, 4);
}

TEST_F(CliTest, SurveyWithLowerBound) {
  auto r = run({"survey", "--count", "2", "--n", "12", "--omega", "3", "--with-lower-bound"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], "instance,n,omega,double,interval2,sparse,c4free,best,exact,lower,upper,ratio");
  EXPECT_EQ(rows[1].rfind("i00000,", 0), 0u);
  EXPECT_EQ(rows[3].rfind("lower-bound-r1,9,3,", 0), 0u);
  EXPECT_EQ(rows[4], "summary,,,,,,,,,,,5/3");
}

TEST_F(CliTest, UsageAndIoErrorsExitFour) {
  EXPECT_EQ(run({"recognize", path("missing.bbc")}).code, 4);
  EXPECT_EQ(run({"generate", "--r", "1", "--n", "5"}).code, 4);
  EXPECT_EQ(run({}).code, 4);
  EXPECT_EQ(run({"colour", file("p3.bbc", kP3), "--alg", "magic"}).code, 4);
  EXPECT_EQ(run({"colour", file("q.bbc", kP3), "--alg", "double", "--d", "1"}).code, 4);
  EXPECT_EQ(run({"recognize", file("bad.bbc", "p bbc 2 1 0 2\ne 1 5\n")}).code, 4);
  EXPECT_EQ(run({"--help"}).code, 0);
}
