#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pcpt/panel.hpp"
#include "pcpt/rng.hpp"

namespace pcpt {

enum class ErrorLaw { Normal, StudentT5Standardized };
enum class BreakSpec { None, CancellingUniform, NonCancellingUniform };

const char* to_string(ErrorLaw law) noexcept;
const char* to_string(BreakSpec spec) noexcept;

/// Panel with AR(1) errors driven by an idiosyncratic shock plus a common
/// factor, and an optional mean shift after t0:
///
///   X_{i,t} = delta_i 1{t > t0} + e_{i,t}
///   e_{i,t} = rho_i e_{i,t-1} + a_{i,t} + beta_i f_t
///
/// a and f are iid unit-variance draws from `error_law`. The recursion starts
/// at e = 0 and runs `burn_in` steps before t = 1.
struct DgpConfig {
  std::size_t n = 1;
  std::size_t t = 2;
  double rho = 0.0;
  double beta = 0.0;
  ErrorLaw error_law = ErrorLaw::Normal;
  BreakSpec break_spec = BreakSpec::None;
  double t0_fraction = 0.5;
  std::uint64_t seed = 0;
  std::size_t burn_in = 100;

  /// Per-series overrides of rho, beta and the break sizes.
  std::optional<std::vector<double>> rho_i;
  std::optional<std::vector<double>> beta_i;
  std::optional<std::vector<double>> delta_i;

  /// floor(t0_fraction * T).
  std::size_t t0() const noexcept;

  void validate() const;
};

/// Break sizes: U(-1/2, 1/2) for cancelling, U(1/10, 1/2) for non-cancelling.
/// `spec` must not be None.
std::vector<double> draw_deltas(BreakSpec spec, std::size_t n, rng::Engine& eng);

/// Streams: deltas from derive_seed(seed, {Deltas}), the factor from
/// {Factor}, series i's shocks from {Idiosyncratic, i}.
Panel simulate_panel(const DgpConfig& cfg);

}  // namespace pcpt
