#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pcpt/cli.hpp"
#include "pcpt/cpt.hpp"
#include "pcpt/dgp.hpp"
#include "pcpt/panel.hpp"

namespace fs = std::filesystem;
using namespace pcpt;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pcpt_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write_panel(const std::string& name, const Panel& p) const {
    std::ofstream f(path(name));
    write_csv(f, p, CsvLayout::SeriesPerColumn);
    return path(name);
  }

  static std::string slurp(const std::string& file) {
    std::ifstream f(file, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
  }

  fs::path dir_;
};

Panel iid_panel() {
  DgpConfig c;
  c.n = 10;
  c.t = 60;
  c.seed = 8;
  return simulate_panel(c);
}

}  // namespace

TEST_F(CliTest, TestCommandMatchesLibrary) {
  const Panel p = iid_panel();
  const auto input = write_panel("iid.csv", p);
  const auto r = run({"test", "--input", input, "--statistic", "J", "--scheme", "nbb", "--block",
                      "adaptive", "--b", "199", "--seed", "42"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);

  TestConfig cfg;
  cfg.b = 199;
  cfg.seed = 42;
  const auto res = run_test(p, cfg);
  EXPECT_EQ(j["reject"], false);
  EXPECT_EQ(j["reject"].get<bool>(), res.reject);
  EXPECT_EQ(j["statistic_value"].get<double>(), res.statistic_value);
  EXPECT_EQ(j["critical_value"].get<double>(), res.critical_value);
  EXPECT_EQ(j["p_value"].get<double>(), res.p_value);
  EXPECT_EQ(j["changepoint_estimate"].get<std::size_t>(), res.changepoint_estimate);
  EXPECT_EQ(j["block_length_used"].get<std::size_t>(), res.block_length_used);
  EXPECT_EQ(j["block_selection"]["l_adpt"].get<std::size_t>(), res.selection->l_adpt);
  EXPECT_EQ(j["n_series"], 10);
  EXPECT_EQ(j["n_time"], 60);
  EXPECT_EQ(j["statistic"], "J");
  EXPECT_EQ(j["scheme"], "nbb");
}

TEST_F(CliTest, TestCommandHonoursLayoutAndOut) {
  const auto input = path("rows.csv");
  {
    std::ofstream f(input);
    write_csv(f, iid_panel(), CsvLayout::SeriesPerRow);
  }
  const auto out = path("res.json");
  const auto r = run({"test", "--input", input, "--layout", "rows", "--statistic", "H", "--scheme",
                      "cbb", "--block", "3", "--b", "49", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  const auto j = nlohmann::json::parse(slurp(out));
  EXPECT_EQ(j["n_series"], 10);
  EXPECT_EQ(j["block_rule"], "fixed:3");
  EXPECT_TRUE(j["block_selection"].is_null());
}

TEST_F(CliTest, TestCommandDeterministicAcrossWorkers) {
  const auto input = write_panel("iid.csv", iid_panel());
  for (const char* scheme : {"nbb", "cbb", "sb"}) {
    const auto a = run({"test", "--input", input, "--scheme", scheme, "--b", "99", "--seed", "3",
                        "--workers", "1"});
    const auto b = run({"test", "--input", input, "--scheme", scheme, "--b", "99", "--seed", "3",
                        "--workers", "8"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST_F(CliTest, ExitCodes) {
  const auto input = write_panel("iid.csv", iid_panel());
  auto r = run({"test", "--input", input, "--block", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("InvalidBlockLength"), std::string::npos) << r.err;
  EXPECT_EQ(run({"test", "--input", input, "--block", "61"}).code, 2);
  EXPECT_EQ(run({"test", "--input", input, "--block", "two"}).code, 2);
  EXPECT_EQ(run({"test", "--input", input, "--alpha", "1.5"}).code, 2);
  EXPECT_EQ(run({"test", "--input", input, "--statistic", "Q"}).code, 2);
  EXPECT_EQ(run({"test", "--input", path("missing.csv")}).code, 2);
  EXPECT_EQ(run({"test"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);

  const auto bad = path("bad.csv");
  std::ofstream(bad) << "1,2\n3,x\n";
  EXPECT_EQ(run({"test", "--input", bad}).code, 2);

  const auto constant = write_panel(
      "const.csv", Panel::from_rows({{1, 2, 4, 3, 5, 2, 7, 1}, {3, 3, 3, 3, 3, 3, 3, 3}}));
  r = run({"test", "--input", constant, "--statistic", "H", "--block", "2", "--b", "19"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("series"), std::string::npos) << r.err;
}

TEST_F(CliTest, SimulateIsByteIdentical) {
  const std::vector<std::string> args{"simulate", "--n", "2", "--t", "5", "--rho", "0", "--beta",
                                      "0", "--law", "normal", "--break", "none", "--seed", "42"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::istringstream in(a.out);
  const auto p = parse_csv(in, CsvLayout::SeriesPerColumn);
  EXPECT_EQ(p.n_series(), 2u);
  EXPECT_EQ(p.n_time(), 5u);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 5);

  auto file_args = args;
  file_args.insert(file_args.end(), {"--out", path("sim.csv")});
  ASSERT_EQ(run(file_args).code, 0);
  EXPECT_EQ(slurp(path("sim.csv")), a.out);
}

TEST_F(CliTest, SimulateRejectsBadParameters) {
  EXPECT_EQ(run({"simulate", "--rho", "1.0"}).code, 2);
  EXPECT_EQ(run({"simulate", "--rho", "-1.5"}).code, 2);
  EXPECT_EQ(run({"simulate", "--t", "1"}).code, 2);
  EXPECT_EQ(run({"simulate", "--law", "cauchy"}).code, 2);
  EXPECT_EQ(run({"simulate", "--break", "cancel", "--t0-frac", "1.2"}).code, 2);
}

TEST_F(CliTest, SimulateNonCancellingBreak) {
  const auto brk = run({"simulate", "--n", "1", "--t", "100", "--break", "noncancel", "--t0-frac",
                        "0.5", "--seed", "17"});
  const auto flat = run({"simulate", "--n", "1", "--t", "100", "--seed", "17"});
  ASSERT_EQ(brk.code, 0) << brk.err;
  std::istringstream a(brk.out), b(flat.out);
  const auto p = parse_csv(a, CsvLayout::SeriesPerColumn);
  const auto q = parse_csv(b, CsvLayout::SeriesPerColumn);
  const double delta = p(0, 99) - q(0, 99);
  EXPECT_GE(delta, 0.1);
  EXPECT_LE(delta, 0.5);
  double before = 0.0, after = 0.0;
  for (std::size_t t = 0; t < 50; ++t) {
    EXPECT_EQ(p(0, t), q(0, t));
    EXPECT_NEAR(p(0, t + 50) - q(0, t + 50), delta, 1e-12);
    before += p(0, t);
    after += p(0, t + 50);
  }
  EXPECT_NEAR((after - before) / 50.0, delta, 0.8);
}

TEST_F(CliTest, BenchBundledTablesEmitsEveryRow) {
  const auto r = run({"bench", "--scenarios", "paper_tables", "--s", "1", "--b", "19", "--seed",
                      "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto arr = nlohmann::json::parse(r.out);
  ASSERT_EQ(arr.size(), 336u);
  for (const auto& rec : arr) {
    EXPECT_EQ(rec["S"], 1);
    EXPECT_EQ(rec["B"], 19);
    EXPECT_TRUE(rec["wall_time_s"].is_null());
  }
}

TEST_F(CliTest, BenchDeterministicAcrossWorkers) {
  for (const char* ext : {".csv", ".json"}) {
    const auto one = path(std::string("one") + ext);
    const auto eight = path(std::string("eight") + ext);
    const std::vector<std::string> base{"bench", "--scenarios", "paper_tables", "--filter",
                                        "N=50/T=50/", "--s", "12", "--b", "39", "--seed", "7"};
    auto a = base, b = base;
    a.insert(a.end(), {"--workers", "1", "--out", one});
    b.insert(b.end(), {"--workers", "8", "--out", eight});
    ASSERT_EQ(run(a).code, 0);
    ASSERT_EQ(run(b).code, 0);
    EXPECT_EQ(slurp(one), slurp(eight));
    EXPECT_FALSE(slurp(one).empty());
  }
}

TEST_F(CliTest, BenchCustomFileAndErrors) {
  const auto file = path("grid.scn");
  std::ofstream(file) << "defaults s=5 b=19\n"
                         "scenario label=a test=JRS n=3 t=30\n"
                         "scenario label=b test=HCB n=3 t=30 rho=0.2\n";
  auto r = run({"bench", "--scenarios", file, "--timing"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[1].rfind("a,J,nbb,adaptive,", 0), 0u);
  EXPECT_EQ(lines[2].rfind("b,H,cbb,fixed:1,", 0), 0u);
  EXPECT_NE(lines[1].back(), ',');

  EXPECT_EQ(run({"bench", "--scenarios", path("nope.scn")}).code, 2);
  EXPECT_EQ(run({"bench", "--scenarios", file, "--filter", "zzz"}).code, 2);
  std::ofstream(path("broken.scn")) << "scenario label=x n=3\n";
  EXPECT_EQ(run({"bench", "--scenarios", path("broken.scn")}).code, 2);
}
