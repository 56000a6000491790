#include "pcpt/bootstrap.hpp"

#include <algorithm>
#include <cmath>

#include "pcpt/parallel.hpp"

namespace pcpt {

const char* to_string(SchemeKind kind) noexcept {
  switch (kind) {
    case SchemeKind::NonOverlapping: return "nbb";
    case SchemeKind::Circular: return "cbb";
    case SchemeKind::Stationary: return "sb";
  }
  return "unknown";
}

void BootstrapScheme::validate(std::size_t t) const {
  if (block_length < 1 || block_length > t) {
    throw Error(ErrorCode::InvalidBlockLength,
                "block length must satisfy 1 <= L <= T (got L=" +
                    std::to_string(block_length) + ", T=" + std::to_string(t) + ")");
  }
}

std::vector<std::size_t> resample_indices(const BootstrapScheme& scheme,
                                          std::size_t t, rng::Engine& eng) {
  scheme.validate(t);
  const std::size_t l = scheme.block_length;
  std::vector<std::size_t> idx;

  switch (scheme.kind) {
    case SchemeKind::NonOverlapping: {
      const std::size_t m = t / l;
      idx.reserve(m * l);
      for (std::size_t b = 0; b < m; ++b) {
        const std::size_t start = rng::uniform_index(eng, m) * l;
        for (std::size_t k = 0; k < l; ++k) idx.push_back(start + k);
      }
      break;
    }
    case SchemeKind::Circular: {
      const std::size_t m = (t + l - 1) / l;
      idx.reserve(m * l);
      for (std::size_t b = 0; b < m; ++b) {
        const std::size_t start = rng::uniform_index(eng, t);
        for (std::size_t k = 0; k < l; ++k) idx.push_back((start + k) % t);
      }
      idx.resize(t);
      break;
    }
    case SchemeKind::Stationary: {
      const double p = 1.0 / static_cast<double>(l);
      idx.reserve(t);
      while (idx.size() < t) {
        const std::size_t start = rng::uniform_index(eng, t);
        const std::uint64_t len = rng::geometric(eng, p);
        for (std::uint64_t k = 0; k < len && idx.size() < t; ++k) {
          idx.push_back((start + k) % t);
        }
      }
      break;
    }
  }
  return idx;
}

Panel resample_panel(const Panel& p, std::span<const std::size_t> indices) {
  const std::size_t n = p.n_series();
  const std::size_t t = p.n_time();
  const std::size_t out_t = indices.size();
  for (std::size_t k : indices) {
    if (k >= t) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "resample index " + std::to_string(k) + " outside [0, " +
                      std::to_string(t) + ")");
    }
  }
  std::vector<double> values(n * out_t);
  for (std::size_t i = 0; i < n; ++i) {
    const auto src = p.row(i);
    double* dst = values.data() + i * out_t;
    for (std::size_t k = 0; k < out_t; ++k) dst[k] = src[indices[k]];
  }
  return Panel(n, out_t, std::move(values));
}

BootstrapDistribution bootstrap_distribution(const Panel& p,
                                             const StatisticFn& statistic,
                                             const BootstrapScheme& scheme,
                                             std::size_t b, const RngSpec& rng,
                                             std::size_t workers) {
  if (b < 1) {
    throw Error(ErrorCode::InvalidConfig, "bootstrap needs at least one replicate");
  }
  scheme.validate(p.n_time());
  const Panel centred = demean_rows(p).first;

  BootstrapDistribution dist{std::vector<double>(b)};
  parallel_for(b, workers, [&](std::size_t j) {
    auto eng = rng.replicate_engine(j);
    const auto idx = resample_indices(scheme, centred.n_time(), eng);
    try {
      dist.draws[j] = statistic(resample_panel(centred, idx));
    } catch (const Error& e) {
      throw BootstrapReplicateError(e.code(), j, e.what());
    }
  });
  return dist;
}

double p_value(const BootstrapDistribution& dist, double observed) {
  const auto count = std::count_if(dist.draws.begin(), dist.draws.end(),
                                   [&](double d) { return d >= observed; });
  return (1.0 + static_cast<double>(count)) / (static_cast<double>(dist.b()) + 1.0);
}

double empirical_quantile(const BootstrapDistribution& dist, double q) {
  if (dist.draws.empty()) {
    throw Error(ErrorCode::InvalidConfig, "empty bootstrap distribution");
  }
  if (!(q > 0.0 && q < 1.0)) {
    throw Error(ErrorCode::InvalidConfig, "quantile level must lie in (0, 1)");
  }
  const double bd = static_cast<double>(dist.b());
  const double x = q * bd;
  double k = std::ceil(x);
  // q*B that should be an integer but picked up representation error above it
  if (k - x > 1.0 - 1e-9 * bd) k -= 1.0;
  const auto rank = std::clamp<std::size_t>(static_cast<std::size_t>(k), 1, dist.b());

  std::vector<double> sorted = dist.draws;
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(rank - 1),
                   sorted.end());
  return sorted[rank - 1];
}

}  // namespace pcpt
