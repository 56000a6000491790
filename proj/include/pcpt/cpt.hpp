#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "pcpt/blocklen.hpp"
#include "pcpt/bootstrap.hpp"
#include "pcpt/panel.hpp"
#include "pcpt/stats.hpp"

namespace pcpt {

enum class StatisticKind { H, J };

const char* to_string(StatisticKind kind) noexcept;

/// Block length from the plug-in rule on the whole panel.
struct AdaptiveBlock {};
/// A given block length.
struct FixedBlock {
  std::size_t length = 1;
};
using BlockRule = std::variant<AdaptiveBlock, FixedBlock>;

std::string to_string(const BlockRule& rule);

/// Fixed block length used for the comparison J and H pipelines whose
/// original block-length rule is unknown: floor(T^(1/5)), at least 1.
/// Not an authoritative reconstruction.
std::size_t reference_fixed_block_length(std::size_t t) noexcept;

struct TestConfig {
  StatisticKind statistic = StatisticKind::J;
  SchemeKind scheme = SchemeKind::NonOverlapping;
  BlockRule block_rule = AdaptiveBlock{};
  std::size_t b = 500;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  /// Bartlett bandwidth for the sigma_i^2 inside H; ignored for J.
  LrvBandwidth lrv_bandwidth = AutoBandwidth{};
  /// Threads for the bootstrap replicates. Results do not depend on it.
  std::size_t workers = 1;

  void validate() const;
};

struct TestResult {
  double statistic_value = 0.0;
  double p_value = 1.0;
  double critical_value = 0.0;
  bool reject = false;
  std::size_t changepoint_estimate = 1;  ///< 1-based, in 1..T-1
  std::size_t block_length_used = 1;
  std::optional<BlockLengthSelection> selection;  ///< set for AdaptiveBlock
};

/// Resolves the block length, evaluates the statistic, calibrates it by the
/// bootstrap and rejects when statistic > the (1-alpha) bootstrap quantile.
TestResult run_test(const Panel& p, const TestConfig& cfg);

/// argmax_t of the CUSUM objective of the chosen statistic.
std::size_t estimate_changepoint(const Panel& p, StatisticKind statistic,
                                 const LrvBandwidth& bandwidth = AutoBandwidth{});

}  // namespace pcpt
