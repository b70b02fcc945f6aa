#include "cli.hpp"

#include "ldic/graph.hpp"
#include "ldic/index_code.hpp"
#include "ldic/serialize.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

const std::string kData = LDIC_TEST_DATA_DIR;

std::string data(const std::string& name) { return kData + "/" + name; }

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "ldic");
  std::vector<const char*> argv;
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = ldic::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ldic_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

} // namespace

TEST_F(CliTest, MinrankExamples) {
  const Result c3 = run({"minrank", "--graph", data("cycle3.txt"), "--q", "2", "--out", tmp("w.json")});
  EXPECT_EQ(c3.code, 0);
  EXPECT_NE(c3.out.find("minrank=2\n"), std::string::npos);
  EXPECT_NE(slurp(tmp("w.json")).find("\"rank\":2"), std::string::npos);

  const Result dag = run({"minrank", "--graph", data("dag3.txt"), "--out", tmp("d.json")});
  EXPECT_EQ(dag.code, 0);
  EXPECT_NE(dag.out.find("minrank=3\n"), std::string::npos);

  EXPECT_EQ(run({"minrank", "--graph", data("cycle3.txt"), "--budget", "1", "--out", tmp("b.json")}).code,
            ldic::cli::kBudget);
}

TEST_F(CliTest, ParseErrors) {
  const Result bad = run({"minrank", "--graph", data("self_loop.txt")});
  EXPECT_EQ(bad.code, ldic::cli::kParseError);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"minrank", "--graph", tmp("missing.txt")}).code, ldic::cli::kParseError);
  EXPECT_EQ(run({"bogus"}).code, ldic::cli::kUsage);
  EXPECT_EQ(run({"minrank", "--graph", data("cycle3.txt"), "--q", "4"}).code, ldic::cli::kUsage);
}

TEST_F(CliTest, ConstructExamples) {
  const Result v = run({"construct", "--graph", data("cycle5.txt"), "--scheme", "cycle-vector", "--M", "5", "--out",
                        tmp("v.json")});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "beta=4 r=8/5 r_avg=8/5\n");

  const Result u = run({"construct", "--graph", data("empty3.txt"), "--scheme", "uncoded", "--out", tmp("u.json")});
  EXPECT_EQ(u.out, "beta=3 r=1 r_avg=1\n");

  const Result d =
      run({"construct", "--graph", data("cycle3_plus_vertex.txt"), "--scheme", "deficit", "--out", tmp("d.json")});
  EXPECT_EQ(d.out, "beta=3 r=2 r_avg=5/4\n");

  const Result mismatch = run({"construct", "--graph", data("dag3.txt"), "--scheme", "cycle-scalar"});
  EXPECT_EQ(mismatch.code, ldic::cli::kUsage);
  EXPECT_NE(mismatch.err.find("requires a directed cycle"), std::string::npos);
}

TEST_F(CliTest, ConstructWritesJsonToStdoutWithoutOut) {
  const Result r = run({"construct", "--graph", data("cycle3.txt"), "--scheme", "cycle-scalar"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(data("cycle_scalar_n3.json")) + "beta=2 r=2 r_avg=4/3\n");
}

TEST_F(CliTest, ConstructThenVerifyRoundTrip) {
  struct Case {
    std::string graph;
    std::string scheme;
    std::string M;
  };
  const std::vector<Case> cases = {{"cycle4.txt", "cycle-scalar", "1"}, {"cycle5.txt", "cycle-vector", "3"},
                                   {"cycle4.txt", "uncoded", "2"},      {"cycle3_plus_vertex.txt", "deficit", "1"},
                                   {"cycle2.txt", "deficit", "1"},      {"cycle5.txt", "cycle-vector", "7"}};
  for (const Case& c : cases) {
    const std::string path = tmp("code.json");
    ASSERT_EQ(run({"construct", "--graph", data(c.graph), "--scheme", c.scheme, "--M", c.M, "--out", path}).code, 0);
    const Result v = run({"verify", "--graph", data(c.graph), "--code", path});
    EXPECT_EQ(v.code, 0) << c.graph << " " << c.scheme;
    EXPECT_EQ(v.out.substr(0, 5), "PASS\n");
    EXPECT_EQ(v.out.find("VIOLATED"), std::string::npos);
  }
}

TEST_F(CliTest, VerifyExamples) {
  const Result ok = run({"verify", "--graph", data("cycle4.txt"), "--code", data("cycle_scalar_n4.json")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out.substr(0, 5), "PASS\n");
  EXPECT_NE(ok.out.find("lemma1 slack=0"), std::string::npos);

  const Result fail = run({"verify", "--graph", data("cycle4.txt"), "--code", data("truncated_n4.json")});
  EXPECT_EQ(fail.code, ldic::cli::kDecodeFail);
  EXPECT_EQ(fail.out, "FAIL\nundecodable (2,2)\n");

  const Result wrong = run({"verify", "--graph", data("cycle3.txt"), "--code", data("cycle_scalar_n4.json")});
  EXPECT_EQ(wrong.code, ldic::cli::kStructural);
}

TEST_F(CliTest, Profile) {
  const Result p = run({"profile", "--code", data("cycle_scalar_n4.json")});
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(p.out, "beta=3 r=2 r_avg=3/2\nlocalities=1,2,2,1\n");
}

TEST_F(CliTest, TradeoffExamples) {
  const Result t4 = run({"tradeoff", "--graph", data("cycle4.txt")});
  EXPECT_EQ(t4.code, 0);
  EXPECT_EQ(t4.out, "r,beta_star\n1,4\n5/4,7/2\n3/2,3\n7/4,3\n2,3\n");
  const Result t3 = run({"tradeoff", "--graph", data("cycle3.txt")});
  EXPECT_NE(t3.out.find("\n4/3,2\n"), std::string::npos);
  EXPECT_EQ(run({"tradeoff", "--graph", data("cycle2.txt")}).code, ldic::cli::kUsage);
  const Result dag = run({"tradeoff", "--graph", data("dag3.txt")});
  EXPECT_EQ(dag.code, ldic::cli::kUsage);
  EXPECT_NE(dag.err.find("closed form only proven for directed cycles"), std::string::npos);
  EXPECT_EQ(run({"tradeoff", "--graph", data("cycle4.txt"), "--r", "5/4"}).out, "r,beta_star\n5/4,7/2\n");
}

TEST_F(CliTest, OracleExamples) {
  const Result s = run({"oracle", "--graph", data("cycle3.txt"), "--ell", "3", "--out", tmp("s.csv")});
  EXPECT_EQ(s.code, 0);
  const std::string csv = slurp(tmp("s.csv"));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "beta,r,r_avg,witness_file");
  EXPECT_NE(csv.find("\n2,2,4/3,"), std::string::npos);
  const std::string witness = tmp("s_w1.json");
  const auto code = ldic::code_from_json(slurp(witness));
  EXPECT_TRUE(ldic::verify_decodable(ldic::SideInformationGraph::directed_cycle(3), code).decodable());

  const Result v = run({"oracle", "--graph", data("cycle3.txt"), "--M", "2", "--ell", "4", "--out", tmp("v.csv")});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(slurp(tmp("v.csv")).find("\n2,3/2,4/3,"), std::string::npos);

  run({"oracle", "--graph", data("empty3.txt"), "--ell", "3", "--out", tmp("e.csv")});
  const std::string e = slurp(tmp("e.csv"));
  EXPECT_EQ(e, "beta,r,r_avg,witness_file\n3,1,1," + tmp("e_w1.json") + "\n");

  EXPECT_EQ(run({"oracle", "--graph", data("cycle3.txt"), "--ell", "3", "--budget", "2"}).code, ldic::cli::kBudget);
}

TEST_F(CliTest, OracleDeterministic) {
  run({"oracle", "--graph", data("cycle4.txt"), "--ell", "3", "--threads", "1", "--out", tmp("a.csv")});
  run({"oracle", "--graph", data("cycle4.txt"), "--ell", "3", "--threads", "3", "--out", tmp("b.csv")});
  const std::string a = slurp(tmp("a.csv"));
  const std::string b = slurp(tmp("b.csv"));
  ASSERT_FALSE(a.empty());
  EXPECT_EQ(slurp(tmp("a_w1.json")), slurp(tmp("b_w1.json")));
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), std::count(b.begin(), b.end(), '\n'));
}

TEST_F(CliTest, NormalizeKeepsProfile) {
  std::ofstream(tmp("c.json")) << "{\"q\":2,\"M\":1,\"N\":3,\"ell\":3,\"L\":[1,0,1,1,1,0,0,1,1],"
                                  "\"queries\":[[1],[2],[3]]}\n";
  const Result r = run({"normalize", "--graph", data("cycle3.txt"), "--code", tmp("c.json"), "--out", tmp("n.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "beta=3 r=1 r_avg=1\n");
  EXPECT_EQ(slurp(tmp("n.json")), "{\"q\":2,\"M\":1,\"N\":3,\"ell\":3,\"L\":[1,0,0,0,1,0,0,0,1],\"queries\":[[1],[2],[3]]}\n");
}
