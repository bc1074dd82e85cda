#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <cmath>
#include <map>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"

using namespace mineo;
namespace fs = std::filesystem;

namespace {

struct run_result {
  int code;
  std::string out;
  std::string err;
};

run_result run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "mineo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), {in, out, err});
  return {code, out.str(), err.str()};
}

std::map<std::string, std::string> first_report(const std::string& text) {
  const auto reports = parse_reports(text);
  if (reports.empty()) return {};
  return {reports.front().begin(), reports.front().end()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("mineo_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const std::string samples = MINEO_SAMPLES_DIR;

}  // namespace

TEST_F(CliTest, CycleExactAndBiased) {
  ASSERT_EQ(run_cli({"gen", "cycle", "--n", "4", "-o", path("c4.graph")}).code, 0);
  const auto exact = run_cli({"solve", "--method", "exact", path("c4.graph")});
  EXPECT_EQ(exact.code, 0);
  EXPECT_EQ(first_report(exact.out)["entropy_bits"], "1.000000000");
  EXPECT_EQ(first_report(exact.out)["optimal"], "true");

  const auto biased = run_cli({"solve", "--method", "biased", "--tie", "by-edge-order", path("c4.graph")});
  EXPECT_EQ(biased.code, 0);
  EXPECT_EQ(first_report(biased.out)["entropy_bits"], "2.000000000");
  EXPECT_EQ(first_report(biased.out)["opt_gap_bound"], "1.000000000");
}

TEST_F(CliTest, ReportHasAllKeys) {
  const auto r = run_cli({"solve", "--method", "bnb", "-"}, "p mineo 4 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n");
  EXPECT_EQ(r.code, 0);
  auto rep = first_report(r.out);
  for (const auto* key : {"method", "entropy_bits", "opt_gap_bound", "lower_bound_bits", "elapsed_ms",
                          "nodes_explored", "optimal"}) {
    EXPECT_TRUE(rep.count(key)) << key;
  }
  EXPECT_EQ(rep["method"], "bnb");
  EXPECT_EQ(rep["entropy_bits"], "1.000000000");
}

TEST_F(CliTest, SolveWritesOrientationThatEvalReads) {
  ASSERT_EQ(run_cli({"gen", "random", "--n", "6", "--m", "12", "--seed", "5", "-o", path("r.graph")}).code, 0);
  const auto s = run_cli({"solve", "--method", "greedy", path("r.graph"), "-o", path("r.orient")});
  ASSERT_EQ(s.code, 0);
  const auto e = run_cli({"eval", path("r.graph"), path("r.orient")});
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(first_report(e.out)["entropy_bits"], first_report(s.out)["entropy_bits"]);
}

TEST_F(CliTest, GenRoundTripsByteIdentically) {
  const auto a = run_cli({"gen", "random", "--n", "9", "--m", "20", "--seed", "77"});
  ASSERT_EQ(a.code, 0);
  const auto b = run_cli({"gen", "random", "--n", "9", "--m", "20", "--seed", "77"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(serialize_graph(parse_graph(a.out)), a.out);
}

TEST_F(CliTest, VerifyClaim1) {
  const auto r = run_cli({"verify", "claim1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("claim1=true"), std::string::npos);
}

TEST_F(CliTest, Bound) {
  const auto r = run_cli({"bound", samples + "/cycle4.graph"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_report(r.out)["lower_bound_bits"], "1.000000000");
}

TEST_F(CliTest, CompareSandwich) {
  ASSERT_EQ(run_cli({"gen", "random", "--n", "7", "--m", "14", "--seed", "3", "-o", path("g")}).code, 0);
  const auto r = run_cli({"compare", path("g")});
  ASSERT_EQ(r.code, 0);
  std::map<std::string, std::map<std::string, std::string>> by_method;
  for (const auto& rep : parse_reports(r.out)) {
    std::map<std::string, std::string> kv(rep.begin(), rep.end());
    by_method[kv["method"]] = kv;
  }
  ASSERT_EQ(by_method.size(), 4u);
  const double lb = std::stod(by_method["lp_bound"]["lower_bound_bits"]);
  const double exact = std::stod(by_method["exact"]["entropy_bits"]);
  const double biased = std::stod(by_method["biased"]["entropy_bits"]);
  EXPECT_LE(lb, exact + 1e-9);
  EXPECT_LE(exact, biased + 1e-9);
  EXPECT_LE(biased, lb + 1.0 + 1e-9);
}

TEST_F(CliTest, TightCertificates) {
  const auto r = run_cli({"gen", "tight", "--t", "3", "-o", path("t3.graph"), "--emit-certificates", path("cert")});
  ASSERT_EQ(r.code, 0);
  const auto opt = run_cli({"eval", path("t3.graph"), path("cert/optimal.orient")});
  const auto bad = run_cli({"eval", path("t3.graph"), path("cert/bad_greedy.orient")});
  EXPECT_EQ(first_report(opt.out)["entropy_bits"], format_bits(std::log2(6.0)));
  EXPECT_EQ(first_report(bad.out)["entropy_bits"], format_bits(std::log2(18.0) - std::log2(6.0) / 3.0));
}

TEST_F(CliTest, ReductionCertificate) {
  const auto r = run_cli({"gen", "reduction", "--cover", samples + "/xc_q6.txt", "--sets", "0,1", "-o",
                          path("red.graph"), "--emit-certificates", path("cert")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_graph(slurp(path("red.graph"))).edge_count(), 72u);
  const auto e = run_cli({"eval", path("red.graph"), path("cert/certificate.orient")});
  EXPECT_EQ(first_report(e.out)["entropy_bits"], format_bits(reduction_target_entropy(6)));

  const auto bad = run_cli({"gen", "reduction", "--cover", samples + "/xc_q6.txt", "--sets", "0,2",
                            "--emit-certificates", path("cert2")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("not exact"), std::string::npos);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"solve", "--method", "nope", "-"}, "").code, 1);
  EXPECT_EQ(run_cli({"solve", "-"}, "p mineo 2 1\ne 1 1\n").code, 1);
  const auto parse = run_cli({"solve", "-"}, "p mineo 2 2\ne 0 1\n");
  EXPECT_EQ(parse.code, 1);
  EXPECT_NE(parse.err.find("end of file"), std::string::npos);
  EXPECT_EQ(run_cli({"solve", "--method", "greedy", "--tie", "by-edge-order", samples + "/cycle4.graph"}).code, 1);
  EXPECT_EQ(run_cli({"solve", path("missing.graph")}).code, 1);
  EXPECT_EQ(run_cli({"gen", "cycle", "--n", "2"}).code, 1);
  EXPECT_EQ(run_cli({"gen", "tight", "--t", "9"}).code, 2);

  // exact refuses m > 24
  ASSERT_EQ(run_cli({"gen", "random", "--n", "5", "--m", "25", "--seed", "1", "-o", path("big")}).code, 0);
  const auto big = run_cli({"solve", "--method", "exact", path("big")});
  EXPECT_EQ(big.code, 2);
  EXPECT_NE(big.err.find("too large"), std::string::npos);
}

TEST_F(CliTest, BnbTimeoutExitsWithLimitCode) {
  ASSERT_EQ(run_cli({"gen", "random", "--n", "60", "--m", "400", "--seed", "2", "-o", path("g")}).code, 0);
  const auto r = run_cli({"solve", "--method", "bnb", "--time-limit", "0.001", path("g")});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(first_report(r.out)["optimal"], "false");
}

TEST_F(CliTest, Help) { EXPECT_EQ(run_cli({"--help"}).code, 0); }
