#include "pcpt/rng.hpp"

#include <cmath>

namespace pcpt::rng {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master,
                          std::initializer_list<std::uint64_t> path) noexcept {
  std::uint64_t h = splitmix64(master);
  for (std::uint64_t c : path) {
    h = splitmix64(h ^ splitmix64(c + 0x9e3779b97f4a7c15ULL));
  }
  return h;
}

double uniform01(Engine& eng) noexcept {
  // midpoint of one of 2^53 equal cells, never 0 or 1
  return (static_cast<double>(eng() >> 11) + 0.5) * 0x1.0p-53;
}

double uniform(Engine& eng, double lo, double hi) noexcept {
  return lo + (hi - lo) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
}

std::uint64_t uniform_index(Engine& eng, std::uint64_t n) noexcept {
  // reject the 2^64 mod n lowest words so every residue is equally likely
  const std::uint64_t threshold = (0 - n) % n;
  std::uint64_t x = eng();
  while (x < threshold) x = eng();
  return x % n;
}

std::uint64_t geometric(Engine& eng, double p) noexcept {
  if (p >= 1.0) return 1;
  const double u = uniform01(eng);
  return 1 + static_cast<std::uint64_t>(std::floor(std::log(u) / std::log1p(-p)));
}

double normal_quantile(double p) noexcept {
  constexpr double a[] = {3.3871328727963666080e0, 1.3314166789178437745e+2,
                          1.9715909503065514427e+3, 1.3731693765509461125e+4,
                          4.5921953931549871457e+4, 6.7265770927008700853e+4,
                          3.3430575583588128105e+4, 2.5090809287301226727e+3};
  constexpr double b[] = {1.0, 4.2313330701600911252e+1,
                          6.8718700749205790830e+2, 5.3941960214247511077e+3,
                          2.1213794301586595867e+4, 3.9307895800092710610e+4,
                          2.8729085735721942674e+4, 5.2264952788528545610e+3};
  constexpr double c[] = {1.42343711074968357734e0, 4.63033784615654529590e0,
                          5.76949722146069140550e0, 3.64784832476320460504e0,
                          1.27045825245236838258e0, 2.41780725177450611770e-1,
                          2.27238449892691845833e-2, 7.74545014278341407640e-4};
  constexpr double d[] = {1.0, 2.05319162663775882187e0,
                          1.67638483018380384940e0, 6.89767334985100004550e-1,
                          1.48103976427480074590e-1, 1.51986665636164571966e-2,
                          5.47593808499534494600e-4, 1.05075007164441684324e-9};
  constexpr double e[] = {6.65790464350110377720e0, 5.46378491116411436990e0,
                          1.78482653991729133580e0, 2.96560571828504891230e-1,
                          2.65321895265761230930e-2, 1.24266094738807843860e-3,
                          2.71155556874348757815e-5, 2.01033439929228813265e-7};
  constexpr double f[] = {1.0, 5.99832206555887937690e-1,
                          1.36929880922735805310e-1, 1.48753612908506148525e-2,
                          7.86869131145613259100e-4, 1.84631831751005468180e-5,
                          1.42151175831644588870e-7, 2.04426310338993978564e-15};

  auto horner = [](const double* coef, double x) {
    double acc = coef[7];
    for (int k = 6; k >= 0; --k) acc = acc * x + coef[k];
    return acc;
  };

  if (p <= 0.0) return -HUGE_VAL;
  if (p >= 1.0) return HUGE_VAL;

  const double q = p - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q * horner(a, r) / horner(b, r);
  }
  double r = std::sqrt(-std::log(q < 0.0 ? p : 1.0 - p));
  double val;
  if (r <= 5.0) {
    r -= 1.6;
    val = horner(c, r) / horner(d, r);
  } else {
    r -= 5.0;
    val = horner(e, r) / horner(f, r);
  }
  return q < 0.0 ? -val : val;
}

double standard_normal(Engine& eng) noexcept {
  return normal_quantile(uniform01(eng));
}

double student_t5_standardized(Engine& eng) noexcept {
  const double z = standard_normal(eng);
  double chi2 = 0.0;
  for (int k = 0; k < 5; ++k) {
    const double g = standard_normal(eng);
    chi2 += g * g;
  }
  // t5 has variance 5/3
  return z / std::sqrt(chi2 / 5.0) * std::sqrt(3.0 / 5.0);
}

}  // namespace pcpt::rng
