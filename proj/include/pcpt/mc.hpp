#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pcpt/cpt.hpp"
#include "pcpt/dgp.hpp"

namespace pcpt {

/// One cell of a size or power table. The seeds inside `dgp` and `test` are
/// ignored; each replication derives its own.
struct Scenario {
  std::string label;
  DgpConfig dgp;
  TestConfig test;
  std::size_t s = 1000;
};

struct MonteCarloReport {
  std::string label;
  StatisticKind statistic = StatisticKind::J;
  SchemeKind scheme = SchemeKind::NonOverlapping;
  std::string block_rule;
  double rho = 0.0;
  double beta = 0.0;
  std::size_t n = 0;
  std::size_t t = 0;
  ErrorLaw error_law = ErrorLaw::Normal;
  std::size_t s = 0;
  std::size_t b = 0;
  double alpha = 0.0;
  std::size_t rejections = 0;
  std::size_t failures = 0;  ///< replications that raised a library error
  double rejection_frequency = 0.0;  ///< rejections / (S - failures)
  double mean_block_length = 0.0;
  double wall_time_s = 0.0;
  std::uint64_t seed_base = 0;
};

/// Replication r = 1..S simulates with seed derive_seed(seed_base, {r}) and
/// tests with derive_seed(seed_base, {r, 1}). Throws
/// ReplicationBudgetExceeded when more than 1% of replications fail.
MonteCarloReport rejection_frequency(const Scenario& sc, std::uint64_t seed_base,
                                     std::size_t workers = 1);

/// Every scenario uses the same seed_base. Reports come back in input order.
std::vector<MonteCarloReport> run_grid(const std::vector<Scenario>& scenarios,
                                       std::uint64_t seed_base,
                                       std::size_t workers = 1);

/// When `with_timing` is false the wall_time_s field is left empty (CSV) or
/// null (JSON) so that output depends only on the inputs and seeds.
void write_reports_csv(std::ostream& out, const std::vector<MonteCarloReport>& reports,
                       bool with_timing);
void write_reports_json(std::ostream& out, const std::vector<MonteCarloReport>& reports,
                        bool with_timing);

}  // namespace pcpt
