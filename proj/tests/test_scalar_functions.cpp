#include "partfn/scalar_functions.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

using namespace partfn;

TEST(BinaryEntropy, Values) {
  EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.25), 2.0 - 0.75 * std::log2(3.0), 1e-15);
  EXPECT_NEAR(binary_entropy(0.25), 0.8112781244591328, 1e-15);
  EXPECT_THROW(binary_entropy(-0.01), std::domain_error);
  EXPECT_THROW(binary_entropy(1.01), std::domain_error);
  EXPECT_THROW(binary_entropy(NAN), std::domain_error);
}

TEST(BinaryEntropy, SymmetricAndBounded) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    double x = u(rng);
    EXPECT_NEAR(binary_entropy(x), binary_entropy(1.0 - x), 1e-12);
    EXPECT_GE(binary_entropy(x), 0.0);
    EXPECT_LE(binary_entropy(x), 1.0);
  }
}

TEST(FBeta, PeakValue) {
  EXPECT_NEAR(f_beta(0.5, 0.25), 2.0, 1e-14);
  for (double beta : {0.1, 0.3, 0.7, 0.9})
    EXPECT_NEAR(f_beta(beta, beta * (1 - beta)), 2.0 * std::sqrt(beta / (1 - beta)), 1e-12) << beta;
  EXPECT_NEAR(f_beta(0.3, 0.5), 1.25664128354071, 1e-12);
}

TEST(GA, Values) {
  EXPECT_EQ(g_a(0.3, 0.3), 0.0);
  EXPECT_NEAR(g_a(1.0, 2.0), -0.4150374992788437, 1e-14);
  EXPECT_LT(g_a(1.0, 2.0), 0.0);
  EXPECT_GT(g_a(1.0, 0.5), 0.0);
}

TEST(GA, SignFlipsAtA) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.01, 2.0);
  for (int i = 0; i < 500; ++i) {
    double a = u(rng), x = u(rng);
    if (std::fabs(x - a) < 1e-6) continue;
    EXPECT_EQ(g_a(a, x) > 0, x < a) << a << " " << x;
  }
}

TEST(UniformGrid, Endpoints) {
  auto g = uniform_grid(0.0, 1.0, 5);
  ASSERT_EQ(g.size(), 5u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 1.0);
  EXPECT_DOUBLE_EQ(g[2], 0.5);
}
