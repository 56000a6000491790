#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcpt/error.hpp"
#include "pcpt/panel.hpp"
#include "pcpt/rng.hpp"

namespace pcpt {

enum class SchemeKind {
  NonOverlapping,  ///< Carlstein: disjoint blocks at 0, L, 2L, ...
  Circular,        ///< Politis-Romano: blocks start anywhere, wrap around
  Stationary,      ///< Politis-Romano: geometric lengths with mean L
};

const char* to_string(SchemeKind kind) noexcept;

struct BootstrapScheme {
  SchemeKind kind = SchemeKind::NonOverlapping;
  std::size_t block_length = 1;

  /// Throws InvalidBlockLength unless 1 <= L <= T.
  void validate(std::size_t t) const;
};

/// Master seed for a bootstrap run. Replicate j draws from
/// rng::derive_seed(seed, {j}).
struct RngSpec {
  std::uint64_t seed = 0;
  static constexpr std::string_view stream = "mt19937_64(derive_seed(seed, {replicate}))";

  rng::Engine replicate_engine(std::size_t j) const {
    return rng::make_engine(rng::derive_seed(seed, {static_cast<std::uint64_t>(j)}));
  }
};

/// 0-based time indices of one bootstrap sample. NonOverlapping returns
/// floor(T/L)*L indices, the other schemes exactly T.
std::vector<std::size_t> resample_indices(const BootstrapScheme& scheme,
                                          std::size_t t, rng::Engine& eng);

/// Column t' of the result is column indices[t'] of p, for all series at once.
Panel resample_panel(const Panel& p, std::span<const std::size_t> indices);

using StatisticFn = std::function<double(const Panel&)>;

struct BootstrapDistribution {
  std::vector<double> draws;
  std::size_t b() const noexcept { return draws.size(); }
};

/// Raised when the statistic fails on a bootstrap sample. Carries the
/// original error code so callers can still tell degenerate data apart.
class BootstrapReplicateError : public Error {
public:
  BootstrapReplicateError(ErrorCode code, std::size_t replicate, const std::string& what)
      : Error(code, "bootstrap replicate " + std::to_string(replicate) + ": " + what),
        replicate_(replicate) {}

  std::size_t replicate() const noexcept { return replicate_; }

private:
  std::size_t replicate_;
};

/// Row-demeans p, then for each replicate resamples the centred panel and
/// evaluates `statistic` on the sample. Draws are identical for any worker
/// count.
BootstrapDistribution bootstrap_distribution(const Panel& p,
                                             const StatisticFn& statistic,
                                             const BootstrapScheme& scheme,
                                             std::size_t b, const RngSpec& rng,
                                             std::size_t workers = 1);

/// (1 + #{draws >= observed}) / (B + 1).
double p_value(const BootstrapDistribution& dist, double observed);

/// The ceil(q*B)-th smallest draw.
double empirical_quantile(const BootstrapDistribution& dist, double q);

}  // namespace pcpt
