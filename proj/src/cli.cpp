#include "pcpt/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcpt/cpt.hpp"
#include "pcpt/dgp.hpp"
#include "pcpt/error.hpp"
#include "pcpt/mc.hpp"
#include "pcpt/panel.hpp"
#include "pcpt/scenario.hpp"

namespace pcpt::cli {

namespace {

struct TestArgs {
  std::string input;
  std::string layout = "cols";
  std::string statistic = "J";
  std::string scheme = "nbb";
  std::string block = "adaptive";
  std::string lrv = "auto";
  std::size_t b = 500;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::string out = "-";
};

struct SimulateArgs {
  std::size_t n = 1;
  std::size_t t = 100;
  double rho = 0.0;
  double beta = 0.0;
  std::string law = "normal";
  std::string brk = "none";
  double t0_frac = 0.5;
  std::uint64_t seed = 0;
  std::size_t burn_in = 100;
  std::string out = "-";
};

struct BenchArgs {
  std::string scenarios;
  std::size_t s = 0;
  std::size_t b = 0;
  std::uint64_t seed = 0;
  std::string out = "-";
  std::string format;
  std::size_t workers = 1;
  std::string filter;
  bool timing = false;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::size_t parse_positive_or_zero(const std::string& v, const char* what) {
  std::size_t x = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw UsageError(std::string("invalid ") + what + ": '" + v + "'");
  }
  return x;
}

/// Writes `body` to the --out target.
void emit(const std::string& target, const std::string& body, std::ostream& out) {
  if (target == "-") {
    out << body;
    return;
  }
  std::ofstream f(target, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + target);
  f << body;
}

int cmd_test(const TestArgs& a, std::ostream& out) {
  const CsvLayout layout = a.layout == "rows" ? CsvLayout::SeriesPerRow : CsvLayout::SeriesPerColumn;
  const Panel panel = load_csv(a.input, layout);

  TestConfig cfg;
  cfg.statistic = a.statistic == "H" ? StatisticKind::H : StatisticKind::J;
  cfg.scheme = a.scheme == "cbb"  ? SchemeKind::Circular
               : a.scheme == "sb" ? SchemeKind::Stationary
                                  : SchemeKind::NonOverlapping;
  if (a.block == "adaptive") {
    cfg.block_rule = AdaptiveBlock{};
  } else {
    cfg.block_rule = FixedBlock{parse_positive_or_zero(a.block, "block length")};
  }
  if (a.lrv != "auto") cfg.lrv_bandwidth = parse_positive_or_zero(a.lrv, "lrv bandwidth");
  cfg.b = a.b;
  cfg.alpha = a.alpha;
  cfg.seed = a.seed;
  cfg.workers = a.workers;

  const TestResult res = run_test(panel, cfg);

  nlohmann::ordered_json j;
  j["statistic"] = to_string(cfg.statistic);
  j["scheme"] = to_string(cfg.scheme);
  j["block_rule"] = to_string(cfg.block_rule);
  j["n_series"] = panel.n_series();
  j["n_time"] = panel.n_time();
  j["b"] = cfg.b;
  j["alpha"] = cfg.alpha;
  j["seed"] = cfg.seed;
  j["statistic_value"] = res.statistic_value;
  j["critical_value"] = res.critical_value;
  j["p_value"] = res.p_value;
  j["reject"] = res.reject;
  j["changepoint_estimate"] = res.changepoint_estimate;
  j["block_length_used"] = res.block_length_used;
  if (res.selection) {
    const auto& s = *res.selection;
    j["block_selection"] = {{"l0", s.l0},
                            {"numerator", s.numerator},
                            {"denominator", s.denominator},
                            {"raw", s.raw},
                            {"l_adpt", s.l_adpt},
                            {"fallback", s.fallback}};
  } else {
    j["block_selection"] = nullptr;
  }
  emit(a.out, j.dump(2) + "\n", out);
  return kOk;
}

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  DgpConfig cfg;
  cfg.n = a.n;
  cfg.t = a.t;
  cfg.rho = a.rho;
  cfg.beta = a.beta;
  cfg.error_law = a.law == "t5" ? ErrorLaw::StudentT5Standardized : ErrorLaw::Normal;
  cfg.break_spec = a.brk == "cancel"      ? BreakSpec::CancellingUniform
                   : a.brk == "noncancel" ? BreakSpec::NonCancellingUniform
                                          : BreakSpec::None;
  cfg.t0_fraction = a.t0_frac;
  cfg.seed = a.seed;
  cfg.burn_in = a.burn_in;

  std::ostringstream body;
  write_csv(body, simulate_panel(cfg), CsvLayout::SeriesPerColumn);
  emit(a.out, body.str(), out);
  return kOk;
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  auto scenarios = load_scenarios(a.scenarios);
  if (!a.filter.empty()) {
    std::erase_if(scenarios, [&](const Scenario& sc) {
      return sc.label.find(a.filter) == std::string::npos;
    });
    if (scenarios.empty()) throw UsageError("no scenario label contains '" + a.filter + "'");
  }
  for (auto& sc : scenarios) {
    if (a.s > 0) sc.s = a.s;
    if (a.b > 0) sc.test.b = a.b;
  }

  const auto reports = run_grid(scenarios, a.seed, a.workers);

  std::string format = a.format;
  if (format.empty()) {
    format = a.out.size() >= 5 && a.out.ends_with(".json") ? "json" : "csv";
  }
  std::ostringstream body;
  if (format == "json") {
    write_reports_json(body, reports, a.timing);
  } else {
    write_reports_csv(body, reports, a.timing);
  }
  emit(a.out, body.str(), out);

  double total = 0.0;
  for (const auto& r : reports) total += r.wall_time_s;
  err << reports.size() << " scenarios in " << total << " s\n";
  return kOk;
}

int map_error(const Error& e, std::ostream& err) {
  err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
  switch (e.code()) {
    case ErrorCode::DegenerateSeries:
      return kDegenerate;
    case ErrorCode::InvalidPanel:
    case ErrorCode::EmptyInput:
    case ErrorCode::NonRectangular:
    case ErrorCode::NonNumericCell:
    case ErrorCode::InvalidBlockLength:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::InvalidConfig:
      return kUsage;
    case ErrorCode::ReplicationBudgetExceeded:
      return kInternal;
  }
  return kInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Panel change-point tests calibrated by block bootstrap", "pcpt"};
  app.require_subcommand(1);

  TestArgs ta;
  auto* test = app.add_subcommand("test", "Run a change-point test on a CSV panel");
  test->add_option("--input", ta.input, "CSV file")->required();
  test->add_option("--layout", ta.layout, "cols: one column per series; rows: one row per series")
      ->check(CLI::IsMember({"cols", "rows"}));
  test->add_option("--statistic", ta.statistic)->check(CLI::IsMember({"H", "J"}));
  test->add_option("--scheme", ta.scheme)->check(CLI::IsMember({"nbb", "cbb", "sb"}));
  test->add_option("--block", ta.block, "adaptive or a block length");
  test->add_option("--lrv", ta.lrv, "Bartlett bandwidth inside H: auto or an integer");
  test->add_option("--b", ta.b, "bootstrap replicates");
  test->add_option("--alpha", ta.alpha);
  test->add_option("--seed", ta.seed);
  test->add_option("--workers", ta.workers)->check(CLI::PositiveNumber);
  test->add_option("--out", ta.out, "output path or - for stdout");

  SimulateArgs sa;
  auto* simulate = app.add_subcommand("simulate", "Simulate a panel as CSV");
  simulate->add_option("--n", sa.n)->check(CLI::PositiveNumber);
  simulate->add_option("--t", sa.t);
  simulate->add_option("--rho", sa.rho);
  simulate->add_option("--beta", sa.beta);
  simulate->add_option("--law", sa.law)->check(CLI::IsMember({"normal", "t5"}));
  simulate->add_option("--break", sa.brk)->check(CLI::IsMember({"none", "cancel", "noncancel"}));
  simulate->add_option("--t0-frac", sa.t0_frac);
  simulate->add_option("--seed", sa.seed);
  simulate->add_option("--burn-in", sa.burn_in);
  simulate->add_option("--out", sa.out);

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Monte Carlo rejection frequencies over a scenario grid");
  bench->add_option("--scenarios", ba.scenarios, "scenario file or 'paper_tables'")->required();
  bench->add_option("--s", ba.s, "override outer replications");
  bench->add_option("--b", ba.b, "override bootstrap replicates");
  bench->add_option("--seed", ba.seed);
  bench->add_option("--out", ba.out, "output path (.csv or .json) or -");
  bench->add_option("--format", ba.format)->check(CLI::IsMember({"csv", "json"}));
  bench->add_option("--workers", ba.workers)->check(CLI::PositiveNumber);
  bench->add_option("--filter", ba.filter, "keep scenarios whose label contains this text");
  bench->add_flag("--timing", ba.timing, "write wall-clock times into the report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (test->parsed()) return cmd_test(ta, out);
    if (simulate->parsed()) return cmd_simulate(sa, out);
    if (bench->parsed()) return cmd_bench(ba, out, err);
  } catch (const Error& e) {
    return map_error(e, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace pcpt::cli
