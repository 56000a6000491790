#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>

/// Reproducible random streams.
///
/// Every random quantity in the library is drawn from a std::mt19937_64
/// engine whose seed is derived from one master seed and a path of integer
/// labels (replicate index, purpose, series index, ...). The derivation is
///
///   h = splitmix64(master)
///   for each label c in path:  h = splitmix64(h ^ splitmix64(c + 0x9e3779b97f4a7c15))
///
/// so any stream can be recreated independently of execution order. All
/// transforms from raw 64-bit words to variates are implemented here rather
/// than through <random> distributions, whose algorithms are not fixed by the
/// standard.
namespace pcpt::rng {

using Engine = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x) noexcept;

std::uint64_t derive_seed(std::uint64_t master,
                          std::initializer_list<std::uint64_t> path) noexcept;

inline Engine make_engine(std::uint64_t seed) { return Engine(seed); }

/// Purpose labels so data generation and resampling never share a stream.
enum class Purpose : std::uint64_t {
  Data = 0,
  Test = 1,
  Deltas = 2,
  Factor = 3,
  Idiosyncratic = 4,
};

constexpr std::uint64_t label(Purpose p) noexcept {
  return static_cast<std::uint64_t>(p);
}

/// Uniform on the open interval (0, 1) with 53-bit resolution.
double uniform01(Engine& eng) noexcept;

/// Uniform on [lo, hi).
double uniform(Engine& eng, double lo, double hi) noexcept;

/// Unbiased uniform integer in [0, n), n > 0, by threshold rejection.
std::uint64_t uniform_index(Engine& eng, std::uint64_t n) noexcept;

/// Geometric number of trials up to and including the first success,
/// success probability p in (0, 1]. Support {1, 2, ...}, mean 1/p.
std::uint64_t geometric(Engine& eng, double p) noexcept;

/// Standard normal quantile function (Wichura's AS 241, PPND16), accurate to
/// about 1e-16 in relative terms.
double normal_quantile(double p) noexcept;

double standard_normal(Engine& eng) noexcept;

/// Student t with 5 degrees of freedom rescaled to unit variance: a standard
/// normal over sqrt(chi2_5 / 5), times sqrt(3/5). The chi-square is the sum
/// of five squared normals from the same stream.
double student_t5_standardized(Engine& eng) noexcept;

}  // namespace pcpt::rng
