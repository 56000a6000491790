#include "pcpt/mc.hpp"

#include <chrono>
#include <charconv>
#include <ostream>

#include <json.hpp>

#include "pcpt/error.hpp"
#include "pcpt/parallel.hpp"

namespace pcpt {

namespace {

struct Outcome {
  bool ok = false;
  bool reject = false;
  std::size_t block_length = 0;
  std::string error;
};

}  // namespace

MonteCarloReport rejection_frequency(const Scenario& sc, std::uint64_t seed_base,
                                     std::size_t workers) {
  if (sc.s < 1) throw Error(ErrorCode::InvalidConfig, sc.label + ": S must be at least 1");
  sc.dgp.validate();
  sc.test.validate();

  const auto start = std::chrono::steady_clock::now();
  std::vector<Outcome> outcomes(sc.s);
  parallel_for(sc.s, workers, [&](std::size_t k) {
    const auto r = static_cast<std::uint64_t>(k + 1);
    DgpConfig dgp = sc.dgp;
    dgp.seed = rng::derive_seed(seed_base, {r});
    TestConfig test = sc.test;
    test.seed = rng::derive_seed(seed_base, {r, rng::label(rng::Purpose::Test)});
    test.workers = 1;
    try {
      const auto res = run_test(simulate_panel(dgp), test);
      outcomes[k] = {true, res.reject, res.block_length_used, {}};
    } catch (const Error& e) {
      outcomes[k] = {false, false, 0, e.what()};
    }
  });
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  MonteCarloReport rep;
  rep.label = sc.label;
  rep.statistic = sc.test.statistic;
  rep.scheme = sc.test.scheme;
  rep.block_rule = to_string(sc.test.block_rule);
  rep.rho = sc.dgp.rho;
  rep.beta = sc.dgp.beta;
  rep.n = sc.dgp.n;
  rep.t = sc.dgp.t;
  rep.error_law = sc.dgp.error_law;
  rep.s = sc.s;
  rep.b = sc.test.b;
  rep.alpha = sc.test.alpha;
  rep.seed_base = seed_base;

  double block_sum = 0.0;
  std::string first_error;
  for (const auto& o : outcomes) {
    if (!o.ok) {
      if (rep.failures++ == 0) first_error = o.error;
      continue;
    }
    rep.rejections += o.reject ? 1 : 0;
    block_sum += static_cast<double>(o.block_length);
  }
  if (100 * rep.failures > sc.s) {
    throw Error(ErrorCode::ReplicationBudgetExceeded,
                sc.label + ": " + std::to_string(rep.failures) + " of " +
                    std::to_string(sc.s) + " replications failed; first: " + first_error);
  }
  const double done = static_cast<double>(sc.s - rep.failures);
  if (done > 0) {
    rep.rejection_frequency = static_cast<double>(rep.rejections) / done;
    rep.mean_block_length = block_sum / done;
  }
  rep.wall_time_s = elapsed.count();
  return rep;
}

std::vector<MonteCarloReport> run_grid(const std::vector<Scenario>& scenarios,
                                       std::uint64_t seed_base, std::size_t workers) {
  if (scenarios.empty()) throw Error(ErrorCode::InvalidConfig, "empty scenario grid");
  std::vector<MonteCarloReport> out;
  out.reserve(scenarios.size());
  for (const auto& sc : scenarios) {
    try {
      out.push_back(rejection_frequency(sc, seed_base, workers));
    } catch (const Error& e) {
      throw Error(e.code(), "scenario '" + sc.label + "': " + e.what());
    }
  }
  return out;
}

namespace {

std::string fmt_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace

void write_reports_csv(std::ostream& out, const std::vector<MonteCarloReport>& reports,
                       bool with_timing) {
  out << "label,statistic,scheme,block_rule,rho,beta,N,T,error_law,S,B,alpha,"
         "rejection_frequency,mean_block_length,wall_time_s\n";
  for (const auto& r : reports) {
    out << csv_field(r.label) << ',' << to_string(r.statistic) << ','
        << to_string(r.scheme) << ',' << r.block_rule << ',' << fmt_double(r.rho) << ','
        << fmt_double(r.beta) << ',' << r.n << ',' << r.t << ',' << to_string(r.error_law)
        << ',' << r.s << ',' << r.b << ',' << fmt_double(r.alpha) << ','
        << fmt_double(r.rejection_frequency) << ',' << fmt_double(r.mean_block_length)
        << ',' << (with_timing ? fmt_double(r.wall_time_s) : std::string()) << '\n';
  }
}

void write_reports_json(std::ostream& out, const std::vector<MonteCarloReport>& reports,
                        bool with_timing) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["label"] = r.label;
    j["statistic"] = to_string(r.statistic);
    j["scheme"] = to_string(r.scheme);
    j["block_rule"] = r.block_rule;
    j["rho"] = r.rho;
    j["beta"] = r.beta;
    j["N"] = r.n;
    j["T"] = r.t;
    j["error_law"] = to_string(r.error_law);
    j["S"] = r.s;
    j["B"] = r.b;
    j["alpha"] = r.alpha;
    j["rejection_frequency"] = r.rejection_frequency;
    j["mean_block_length"] = r.mean_block_length;
    j["wall_time_s"] = with_timing ? nlohmann::ordered_json(r.wall_time_s) : nullptr;
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << '\n';
}

}  // namespace pcpt
