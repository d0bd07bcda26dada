#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "specincl/report.hpp"

namespace fs = std::filesystem;
using namespace specincl;

namespace {

struct Result {
  int code = 0;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "specincl");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("specincl_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

double max_modulus(const Region& r) {
  double m = 0.0;
  for (std::size_t i = 0; i < r.grid().node_count(); ++i)
    if (r.contains_node(i)) m = std::max(m, std::abs(r.grid().node(i)));
  return m;
}

}  // namespace

TEST(CliInclude, JordanAllMethodsWritesThreePanels) {
  fs::path dir = scratch("jordan_all");
  Result r = run({"include", "--builtin", "jordan", "--M", "64", "--method", "all", "--n", "4",
                  "--eps", "0.15", "--t", "1", "--nodes", "128", "--no-timestamp", "--out-dir",
                  dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* stem : {"tau_n4_eps0.15", "pi_n4_eps0.15", "tau1_n4_eps0.15"})
    for (const char* ext : {".json", ".csv", ".svg"})
      EXPECT_TRUE(fs::exists(dir / (std::string(stem) + ext))) << stem << ext;

  MethodReport tau = report_from_json(slurp(dir / "tau_n4_eps0.15.json"));
  MethodReport tau1 = report_from_json(slurp(dir / "tau1_n4_eps0.15.json"));
  MethodReport pi = report_from_json(slurp(dir / "pi_n4_eps0.15.json"));
  double cell = tau.region.grid().cell_diagonal();
  EXPECT_NEAR(max_modulus(tau.region), 1.18, 0.01 + cell);
  EXPECT_NEAR(max_modulus(tau1.region), 1.48, 0.01 + cell);
  EXPECT_LE(max_modulus(pi.region), 1.92 + cell);
  EXPECT_GT(max_modulus(pi.region), 1.48);
  EXPECT_NE(slurp(dir / "tau_n4_eps0.15.svg").find("<svg"), std::string::npos);
}

TEST(CliInclude, OutputsAreDeterministic) {
  std::vector<std::string> args{"include", "--builtin", "laplacian", "--M", "32", "--method",
                                "tau",     "--n",       "4",         "--eps", "0", "--nodes",
                                "96",      "--no-timestamp"};
  fs::path a = scratch("det_a"), b = scratch("det_b");
  auto with_dir = [&](const fs::path& d) {
    auto v = args;
    v.push_back("--out-dir");
    v.push_back(d.string());
    return v;
  };
  ASSERT_EQ(run(with_dir(a)).code, 0);
  ASSERT_EQ(run(with_dir(b)).code, 0);
  for (const char* f : {"tau_n4_eps0.json", "tau_n4_eps0.csv", "tau_n4_eps0.svg"})
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
}

TEST(CliInclude, ConfigErrorsExitTwo) {
  fs::path dir = scratch("errors");
  std::string out = dir.string();
  EXPECT_EQ(run({"include", "--builtin", "jordan", "--M", "16", "--method", "pi", "--n", "2",
                 "--out-dir", out})
                .code,
            2);
  EXPECT_EQ(run({"include", "--builtin", "jordan", "--M", "16", "--method", "tau", "--n", "2",
                 "--t", "1", "--out-dir", out})
                .code,
            2);
  EXPECT_EQ(run({"include", "--builtin", "jordan", "--M", "16", "--method", "tau", "--out-dir", out})
                .code,
            2);
  EXPECT_EQ(run({"include", "--builtin", "nope", "--M", "16", "--method", "gersh", "--out-dir", out})
                .code,
            2);
  EXPECT_EQ(run({"include", "--input", (dir / "missing.mtx").string(), "--method", "gersh",
                 "--out-dir", out})
                .code,
            2);
  EXPECT_EQ(run({"include", "--builtin", "jordan", "--M", "16", "--method", "tau", "--n", "99",
                 "--out-dir", out})
                .code,
            2);
  EXPECT_EQ(run({"include", "--builtin", "jordan", "--M", "16", "--method", "tau", "--n", "2",
                 "--eps", "-1", "--out-dir", out})
                .code,
            2);
  Result r = run({"frobnicate"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(CliInclude, MatrixFileInput) {
  fs::path dir = scratch("file_input");
  {
    std::ofstream f(dir / "a.mtx");
    f << "%%MatrixMarket matrix coordinate real general\n4 4 5\n1 1 1\n2 2 2\n3 3 3\n4 4 4\n1 2 0.5\n";
  }
  Result r = run({"include", "--input", (dir / "a.mtx").string(), "--method", "block-gersh",
                  "--partition", "uniform:2", "--nodes", "64", "--out-dir", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir / "block-gersh_eps0.json"));
}

TEST(CliConverge, WritesStudyCsvAndSummary) {
  fs::path dir = scratch("converge");
  Result r = run({"converge", "--builtin", "jordan", "--M", "32", "--n", "2,4", "--eps", "0.15",
                  "--nodes", "64", "--out-dir", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::string csv = slurp(dir / "study.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "M,n,w,eps,d_H,cell_size");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_NE(r.out.find("decrease within slack"), std::string::npos);

  EXPECT_EQ(run({"converge", "--builtin", "jordan", "--M", "32", "--schedule", "", "--eps", "0.1",
                 "--out-dir", dir.string()})
                .code,
            2);
  EXPECT_EQ(run({"converge", "--builtin", "jordan", "--schedule", "32:2", "--eps", "0.1",
                 "--out-dir", dir.string()})
                .code,
            2);
}

TEST(CliVerify, RandomCorpusIsContained) {
  fs::path dir = scratch("verify");
  Result r = run({"verify", "--seed", "1", "--count", "3", "--order", "8", "--nodes", "64",
                  "--out-dir", dir.string()});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  std::string json = slurp(dir / "verify.json");
  EXPECT_NE(json.find("\"violations\": 0"), std::string::npos);
  EXPECT_NE(json.find("\"contained\": true"), std::string::npos);
}

TEST(CliVerify, HermitianCorpusAtZero) {
  fs::path dir = scratch("verify_herm");
  Result r = run({"verify", "--kind", "hermitian", "--count", "3", "--order", "8", "--eps", "0",
                  "--nodes", "64", "--out-dir", dir.string()});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(CliVerify, HalvedPenaltyIsFlagged) {
  // random Toeplitz matrices sit close enough to the bound that half the
  // penalty loses part of Spec_eps A; the full penalty on the same corpus is clean
  fs::path dir = scratch("verify_negative");
  std::vector<std::string> args{"verify", "--kind", "toeplitz", "--seed", "1", "--count", "2",
                                "--order", "16", "--eps", "0.1", "--methods", "tau,pi,tau1",
                                "--nodes", "64", "--out-dir", dir.string()};
  ASSERT_EQ(run(args).code, 0);
  args.push_back("--penalty-scale");
  args.push_back("0.5");
  Result r = run(args);
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_NE(slurp(dir / "verify.json").find("\"contained\": false"), std::string::npos);
}
