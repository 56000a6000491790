#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "pcpt/panel.hpp"

namespace pcpt {

/// Bartlett kernel w(k, L) = (1 - |k/L|) on |k/L| <= 1, zero elsewhere.
double bartlett_weight(double k, double bandwidth) noexcept;

/// ceil(sqrt(T)), computed in integers.
std::size_t pilot_bandwidth(std::size_t t) noexcept;

/// ceil(T^(1/3)), computed in integers. Used when the plug-in rule breaks down.
std::size_t fallback_block_length(std::size_t t) noexcept;

/// Cross-sectional autocovariance matrices of the row-demeaned panel.
///
/// v[k-1] holds V_k = (1/T) sum_{t=1}^{T-(k-1)} x_t x_{t+k-1}^T, i.e. the
/// lag-(k-1) autocovariance: v[0] is the lag-0 covariance matrix, v[k] the
/// lag-k one. This indexing follows the summation limit T-(k-1).
struct LagCovMatrices {
  std::vector<Eigen::MatrixXd> v;
};

/// Requires 1 <= l0 <= T.
LagCovMatrices lag_cov(const Panel& p, std::size_t l0);

/// Result of the plug-in block-length rule
///
///   L = ceil( (3 T |sum_ij CP1_ij| / (sum_ij CP0_ij + sum_j CP0_jj^2))^(1/5) )
///
/// with CP0 = V_1 + 2 sum_{k<L0} w(k,L0) V_{k+1} and
/// CP1 = 2 sum_{k<L0} k w(k,L0) V_{k+1}, clamped to [1, floor(T/2)].
struct BlockLengthSelection {
  std::size_t l0 = 0;
  Eigen::MatrixXd cp0;
  Eigen::MatrixXd cp1;
  double numerator = 0.0;    ///< 3 T |sum CP1|
  double denominator = 0.0;  ///< sum CP0 + sum diag(CP0)^2
  double raw = 0.0;          ///< value inside the ceiling; 0 on fallback
  std::size_t l_adpt = 1;
  bool fallback = false;     ///< denominator <= 0, l_adpt = ceil(T^(1/3))
};

/// Selection from given CP matrices; split out so the formula can be checked
/// on matrices that did not come from a panel.
BlockLengthSelection select_from_cp(std::size_t t, std::size_t l0,
                                    Eigen::MatrixXd cp0, Eigen::MatrixXd cp1);

/// Builds CP0 and CP1 from V_1..V_{L0} with L0 = lc.v.size().
BlockLengthSelection select_from_lag_cov(std::size_t t, const LagCovMatrices& lc);

/// The full rule with L0 = ceil(sqrt(T)). Requires T >= 4.
BlockLengthSelection adaptive_block_length(const Panel& p);

}  // namespace pcpt
