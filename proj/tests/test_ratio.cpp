#include "partfn/ratio.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "partfn/partition_core.hpp"

using namespace partfn;

TEST(RatioCurve, FullSetGivesOne) {
  std::vector<std::uint64_t> ms{10, 100, 10000};
  auto curve = ratio_curve(PartSet::range(1, 10000), 1.0, ms, 10000);
  ASSERT_EQ(curve.size(), 3u);
  for (const auto& s : curve) {
    EXPECT_TRUE(s.exact_denominator);
    EXPECT_NEAR(s.ratio, 1.0, 1e-9) << s.m;
  }
}

TEST(RatioCurve, OnePlusEvensApproachesOne) {
  PartSet a = PartSet::range(1, 1);
  std::vector<std::uint64_t> evens;
  for (std::uint64_t x = 2; x <= 10000; x += 2) evens.push_back(x);
  a = a.unite(PartSet::of(evens));
  std::vector<std::uint64_t> ms{100, 1000, 10000};
  auto curve = ratio_curve(a, 0.5, ms, 10000);
  EXPECT_NEAR(curve[0].log_pa.log(), 14.074770779100788, 1e-9);
  EXPECT_NEAR(curve[1].log_pa.log(), 52.09131212527811, 1e-8);
  EXPECT_NEAR(curve[2].log_pa.log(), 174.94514291532457, 1e-7);
  EXPECT_NEAR(curve[0].ratio, 1.1511238178287817, 1e-9);
  EXPECT_NEAR(curve[1].ratio, 1.0590405693804914, 1e-9);
  EXPECT_NEAR(curve[2].ratio, 1.0235446745019547, 1e-9);
  EXPECT_GT(curve[0].ratio, curve[1].ratio);
  EXPECT_GT(curve[1].ratio, curve[2].ratio);
  EXPECT_GT(curve[2].ratio, 1.0);
}

TEST(RatioCurve, ZeroCountIsSentinel) {
  std::vector<std::uint64_t> ms{7, 8};
  auto curve = ratio_curve(PartSet{{2, 2}}, 1.0, ms, 100);
  EXPECT_TRUE(curve[0].log_pa.is_zero());
  EXPECT_EQ(curve[0].ratio, -INFINITY);
  EXPECT_FALSE(curve[1].log_pa.is_zero());
  EXPECT_EQ(curve[1].ratio, 0.0);  // p_{2}(8) = 1
}

TEST(RatioCurve, HardyRamanujanAboveExactLimit) {
  std::vector<std::uint64_t> ms{400};
  auto curve = ratio_curve(PartSet::range(1, 400), 0.5, ms, 400, 100);
  EXPECT_FALSE(curve[0].exact_denominator);
  EXPECT_DOUBLE_EQ(curve[0].log_p_alpha_m, hardy_ramanujan_log(200));
}

TEST(RatioCurve, RejectsBadSamples) {
  std::vector<std::uint64_t> beyond{101};
  EXPECT_THROW(ratio_curve(PartSet::range(1, 100), 1.0, beyond, 100), std::invalid_argument);
  std::vector<std::uint64_t> tiny{3};
  EXPECT_THROW(ratio_curve(PartSet::range(1, 100), 0.5, tiny, 100), std::invalid_argument);
  std::vector<std::uint64_t> ok{10};
  EXPECT_THROW(ratio_curve(PartSet::range(1, 100), 0.0, ok, 100), std::invalid_argument);
  EXPECT_THROW(ratio_curve(PartSet::range(1, 100), 1.5, ok, 100), std::invalid_argument);
}
