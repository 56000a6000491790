#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <vector>

#include "pcpt/rng.hpp"

using namespace pcpt::rng;

TEST(Rng, NormalQuantileMatchesReferenceValues) {
  // reference: scipy.special.ndtri
  const std::array<std::pair<double, double>, 12> table{{
      {1e-300, -37.0470962993612},
      {1e-20, -9.262340089798409},
      {1e-10, -6.361340902404056},
      {0.001, -3.090232306167813},
      {0.02425, -1.972961051311885},
      {0.1, -1.2815515655446004},
      {0.3, -0.5244005127080409},
      {0.5, 0.0},
      {0.7, 0.5244005127080407},
      {0.975, 1.959963984540054},
      {0.999999, 4.753424308817087},
      {0.999999999999, 7.0344869100478356},
  }};
  for (auto [p, z] : table) {
    EXPECT_NEAR(normal_quantile(p), z, 1e-13 * std::max(1.0, std::abs(z))) << "p=" << p;
  }
}

TEST(Rng, DerivedSeedsAreDistinctAndStable) {
  EXPECT_EQ(derive_seed(1, {2, 3}), derive_seed(1, {2, 3}));
  EXPECT_NE(derive_seed(1, {2, 3}), derive_seed(1, {3, 2}));
  EXPECT_NE(derive_seed(1, {2}), derive_seed(2, {2}));
  EXPECT_NE(derive_seed(1, {}), derive_seed(1, {0}));
}

TEST(Rng, StreamsAreReproducible) {
  auto a = make_engine(42);
  auto b = make_engine(42);
  for (int k = 0; k < 1000; ++k) {
    ASSERT_EQ(standard_normal(a), standard_normal(b));
    ASSERT_EQ(uniform_index(a, 7), uniform_index(b, 7));
  }
}

TEST(Rng, UniformIndexCoversRangeEvenly) {
  auto eng = make_engine(9);
  std::vector<int> counts(6, 0);
  const int draws = 600000;
  for (int k = 0; k < draws; ++k) ++counts[uniform_index(eng, 6)];
  for (int c : counts) EXPECT_NEAR(c, draws / 6, 5 * std::sqrt(draws / 6.0));
  EXPECT_EQ(uniform_index(eng, 1), 0u);
}

TEST(Rng, Uniform01IsOpen) {
  auto eng = make_engine(1);
  for (int k = 0; k < 100000; ++k) {
    const double u = uniform01(eng);
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Rng, GeometricMeanLength) {
  auto eng = make_engine(17);
  double sum = 0.0;
  const int draws = 100000;
  for (int k = 0; k < draws; ++k) {
    const auto g = geometric(eng, 0.25);
    ASSERT_GE(g, 1u);
    sum += static_cast<double>(g);
  }
  EXPECT_NEAR(sum / draws, 4.0, 0.1);
  EXPECT_EQ(geometric(eng, 1.0), 1u);
}

TEST(Rng, NormalMoments) {
  auto eng = make_engine(5);
  double s1 = 0.0, s2 = 0.0;
  const int draws = 1000000;
  for (int k = 0; k < draws; ++k) {
    const double z = standard_normal(eng);
    s1 += z;
    s2 += z * z;
  }
  EXPECT_NEAR(s1 / draws, 0.0, 0.005);
  EXPECT_NEAR(s2 / draws, 1.0, 0.005);
}

TEST(Rng, StandardizedT5HasUnitVariance) {
  auto eng = make_engine(6);
  double s1 = 0.0, s2 = 0.0;
  const int draws = 1000000;
  for (int k = 0; k < draws; ++k) {
    const double x = student_t5_standardized(eng);
    s1 += x;
    s2 += x * x;
  }
  const double m = s1 / draws;
  EXPECT_NEAR(m, 0.0, 0.005);
  EXPECT_NEAR(s2 / draws - m * m, 1.0, 0.01);
}
