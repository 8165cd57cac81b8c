#include "partfn/bounds_audit.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "partfn/constructions.hpp"
#include "partfn/partition_core.hpp"

using namespace partfn;

namespace {

PartSet random_subset(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi, double keep) {
  std::bernoulli_distribution coin(keep);
  std::vector<std::uint64_t> xs;
  for (auto x = lo; x <= hi; ++x)
    if (coin(rng)) xs.push_back(x);
  return PartSet::of(xs);
}

void expect_consistent(const BoundReport& r) {
  if (r.pass) EXPECT_TRUE(r.preconditions_met);
  if (r.marginal) EXPECT_TRUE(r.pass);
  if (r.preconditions_met && !r.lhs.is_zero() && !r.rhs.is_zero()) EXPECT_TRUE(std::isfinite(r.slack));
}

}  // namespace

TEST(LemmaNames, RoundTrip) {
  for (auto id : all_lemmas()) EXPECT_EQ(lemma_from_name(lemma_name(id)), id);
  EXPECT_EQ(all_lemmas().size(), 14u);
  EXPECT_FALSE(lemma_from_name("no-such-lemma").has_value());
}

TEST(LogSlack, SignConventions) {
  auto two = LogMag::from_log(2.0), three = LogMag::from_log(3.0), z = LogMag::zero();
  EXPECT_DOUBLE_EQ(log_slack(two, three, Relation::leq), 1.0);
  EXPECT_DOUBLE_EQ(log_slack(two, three, Relation::geq), -1.0);
  EXPECT_DOUBLE_EQ(log_slack(two, two, Relation::eq), 0.0);
  EXPECT_LT(log_slack(two, three, Relation::eq), 0.0);
  EXPECT_EQ(log_slack(z, two, Relation::leq), INFINITY);
  EXPECT_EQ(log_slack(z, two, Relation::geq), -INFINITY);
  EXPECT_EQ(log_slack(z, z, Relation::eq), 0.0);
}

TEST(TrivialBound, Examples) {
  auto r = audit_trivial_bound(PartSet{{1, 2}}, 4);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(*r.lhs_exact, 3);
  EXPECT_EQ(*r.rhs_exact, 25);

  auto e = audit_trivial_bound(PartSet{}, 5);
  EXPECT_TRUE(e.pass);
  EXPECT_EQ(*e.lhs_exact, 0);
  EXPECT_EQ(*e.rhs_exact, 1);
  EXPECT_TRUE(e.lhs.is_zero());

  auto full = audit_trivial_bound(PartSet::range(1, 30), 30);
  EXPECT_TRUE(full.pass);
  EXPECT_EQ(*full.lhs_exact, 5604);
}

TEST(PkSandwich, Examples) {
  auto r = audit_pk_sandwich(4, 2);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.param("lower"), "3");
  EXPECT_EQ(*r.lhs_exact, 4);
  EXPECT_EQ(*r.rhs_exact, 4);
  EXPECT_DOUBLE_EQ(r.slack, 0.0);

  auto one = audit_pk_sandwich(1, 1);
  EXPECT_TRUE(one.pass);
  EXPECT_EQ(*one.lhs_exact, 1);
  EXPECT_FALSE(audit_pk_sandwich(0, 1).preconditions_met);
}

TEST(PkSandwich, ExhaustiveSweep) {
  for (std::uint64_t n = 1; n <= 60; ++n)
    for (std::uint64_t k = 1; k <= 12; ++k) ASSERT_TRUE(audit_pk_sandwich(n, k).pass) << n << " " << k;
}

TEST(ShiftIdentity, Examples) {
  auto r = audit_shift_identity(2, 2);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(*r.lhs_exact, 2);
  EXPECT_EQ(*r.rhs_exact, 2);
  EXPECT_TRUE(audit_shift_identity(9, 1).pass);
  for (std::uint64_t n = 0; n <= 60; ++n)
    for (std::uint64_t k = 1; k <= 12; ++k) ASSERT_TRUE(audit_shift_identity(n, k).pass);
}

TEST(FirstIsBest, Examples) {
  auto r = audit_first_is_best(PartSet{{3, 3}, {5, 5}}, 8);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(*r.lhs_exact, 1);
  EXPECT_EQ(*r.rhs_exact, 5);

  auto eq = audit_first_is_best(PartSet::range(1, 6), 20);
  EXPECT_TRUE(eq.pass);
  EXPECT_EQ(*eq.lhs_exact, *eq.rhs_exact);
}

TEST(FirstIsBest, RandomSweep) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    auto a = random_subset(rng, 1, 30, 0.2);
    std::uint64_t n = rng() % 61;
    auto r = audit_first_is_best(a, n);
    ASSERT_TRUE(r.pass) << a.to_string() << " n=" << n;
    expect_consistent(r);
  }
}

TEST(StarsBarsInjection, Examples) {
  auto r = stars_bars_injection_bound(3, 2, 2, 10);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(*r.lhs_exact, 12);
  EXPECT_EQ(*r.rhs_exact, 6);

  auto zero = stars_bars_injection_bound(5, 3, 0, 7);
  EXPECT_TRUE(zero.pass);
  EXPECT_EQ(*zero.rhs_exact, 1);

  auto bad = stars_bars_injection_bound(3, 2, 3, 10);  // 3 * 5 > 10
  EXPECT_FALSE(bad.preconditions_met);
  EXPECT_FALSE(bad.pass);
  EXPECT_FALSE(stars_bars_injection_bound(1, 2, 1, 10).preconditions_met);
}

TEST(StarsBarsInjection, Sweep) {
  int checked = 0;
  for (std::uint64_t n = 2; n <= 8; ++n)
    for (std::uint64_t big_k = 0; big_k <= 5; ++big_k)
      for (std::uint64_t m = 0; m <= 60; ++m)
        for (std::uint64_t s = 0; s * (n + big_k) <= m; ++s) {
          auto r = stars_bars_injection_bound(n, big_k, s, m);
          ASSERT_TRUE(r.pass) << n << " " << big_k << " " << s << " " << m;
          ++checked;
        }
  EXPECT_GT(checked, 1000);
}

TEST(LiminfLowerMain, TrivialWhenRhsNonpositive) {
  auto r = audit_liminf_lower_main(1.0 / 16, 16, 256);
  EXPECT_TRUE(r.preconditions_met);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.trivial);
  EXPECT_NEAR(r.rhs.log(), (2 * std::log(16.0) - 8) * 4, 1e-12);
}

TEST(LiminfLowerMain, SmallAlphaAtRegionStart) {
  auto r = audit_liminf_lower_main(0.01, 400, 25600);
  EXPECT_TRUE(r.preconditions_met);
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(r.trivial);
  EXPECT_NEAR(r.rhs.log(), (2 * std::log(100.0) - 8) * 16, 1e-9);
  EXPECT_EQ(r.param("case"), "1");
  EXPECT_EQ(r.param("K"), "400");
  EXPECT_EQ(r.param("s"), "32");
  // the injection alone already clears the bound
  EXPECT_GT(std::stod(r.param("injection_log")), r.rhs.log());
  EXPECT_GE(r.lhs.log(), std::stod(r.param("injection_log")) - 1e-9);
}

TEST(LiminfLowerMain, InjectionMechanismAtSameParameters) {
  auto inj = liminf_injection_params(0.01, 400, 25600);
  ASSERT_TRUE(inj.has_value());
  EXPECT_TRUE(stars_bars_injection_bound(400, inj->big_k, inj->s, 25600).pass);
}

TEST(LiminfLowerMain, OutsideRegionHasNoVerdict) {
  auto r = audit_liminf_lower_main(0.5, 2, 10);
  EXPECT_FALSE(r.preconditions_met);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(audit_liminf_lower_main(1.0 / 16, 16, 255).preconditions_met);
  Thresholds t;
  t.n1 = 16;
  EXPECT_FALSE(audit_liminf_lower_main(1.0 / 16, 16, 256, t).preconditions_met);
}

TEST(InjectionParams, SmallScaleMechanismSweep) {
  for (double alpha : {0.25, 0.125}) {
    for (std::uint64_t n = 8; n <= 16; ++n) {
      auto region = gap_region(alpha, n);
      for (std::uint64_t m = region.lo; m <= std::min<std::uint64_t>(region.hi, 600); m += 7) {
        auto inj = liminf_injection_params(alpha, n, m);
        if (!inj) continue;
        ASSERT_TRUE(stars_bars_injection_bound(n, inj->big_k, inj->s, m).pass) << alpha << " " << n << " " << m;
      }
    }
  }
}

TEST(Szekeres, ExplicitConstantsHold) {
  auto a = audit_szekeres(0.9, 1000);
  EXPECT_EQ(a.param("k"), "28");
  EXPECT_TRUE(a.preconditions_met);
  EXPECT_TRUE(a.pass);
  EXPECT_FALSE(a.marginal);

  auto b = audit_szekeres(0.5, 4000);
  EXPECT_EQ(b.param("k"), "31");
  EXPECT_TRUE(b.preconditions_met);
  EXPECT_TRUE(b.pass);
}

TEST(Szekeres, PreconditionFailsAtSmallN) {
  auto r = audit_szekeres(0.9, 100);
  EXPECT_EQ(r.param("cond_log_en"), "false");
  EXPECT_FALSE(r.preconditions_met);
  EXPECT_FALSE(r.pass);
}

TEST(ShiftBijection, Examples) {
  auto r = shift_bijection_bound(3, 2, 10);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(*r.lhs_exact, 5);
  EXPECT_EQ(*r.rhs_exact, 2);

  auto tight = shift_bijection_bound(4, 3, 12);
  EXPECT_TRUE(tight.pass);
  EXPECT_EQ(*tight.rhs_exact, 0);
}

TEST(ShiftBijection, Sweep) {
  for (std::uint64_t lower = 1; lower <= 10; ++lower)
    for (std::uint64_t k = 1; k <= 6; ++k)
      for (std::uint64_t n = 0; n <= 120; ++n) ASSERT_TRUE(shift_bijection_bound(lower, k, n).pass);
}

TEST(DixmierNicolasUpper, Examples) {
  auto a = audit_dixmier_nicolas_upper(2.0, 400);
  EXPECT_EQ(a.param("L"), "40");
  EXPECT_TRUE(a.preconditions_met);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.param("explicit_lower_feasible"), "false");

  auto b = audit_dixmier_nicolas_upper(4.0, 2500);
  EXPECT_EQ(b.param("L"), "200");
  EXPECT_TRUE(b.pass);

  auto empty = audit_dixmier_nicolas_upper(30.0, 100);
  EXPECT_TRUE(empty.lhs.is_zero());
  EXPECT_TRUE(empty.pass);
  EXPECT_FALSE(audit_dixmier_nicolas_upper(1.0, 100).preconditions_met);
}

TEST(LiminfUpperMain, AdversarialPrefix) {
  const double alpha = 0.25;
  for (std::uint64_t n : {12u, 40u, 60u}) {
    std::uint64_t take = static_cast<std::uint64_t>(alpha * n);
    std::uint64_t m = static_cast<std::uint64_t>(alpha * n * n);
    auto a = PartSet::range(n - take + 1, n).unite(PartSet::range(n + 1, m));
    auto r = audit_liminf_upper_main(a, alpha, n);
    EXPECT_TRUE(r.preconditions_met) << n;
    EXPECT_TRUE(r.pass) << n;
    EXPECT_EQ(r.param("split_identity"), "true");
  }
}

TEST(LiminfUpperMain, InitialSegmentAndEmptyTail) {
  auto r = audit_liminf_upper_main(PartSet::range(1, 10), 0.25, 40);
  EXPECT_TRUE(r.preconditions_met);
  EXPECT_TRUE(r.pass);
  // with nothing above n the second factor is p_{A2}(0) = 1
  auto t1 = restricted_table(PartSet::range(1, 10), 400);
  EXPECT_EQ(*r.rhs_exact, Count(401) * *std::max_element(t1.begin(), t1.end()));
}

TEST(LiminfUpperMain, DensityMismatchIsPreconditionFailure) {
  auto r = audit_liminf_upper_main(PartSet::range(1, 3), 0.25, 40);
  EXPECT_FALSE(r.preconditions_met);
  EXPECT_FALSE(r.pass);
}

TEST(LiminfUpperMain, RandomSetsWithExactDensity) {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 30; ++iter) {
    std::uint64_t n = 10 + rng() % 30;
    const double alpha = 0.2;
    std::uint64_t m = floor_mul(alpha, static_cast<long double>(n) * n);
    std::vector<std::uint64_t> pool(n);
    for (std::uint64_t i = 0; i < n; ++i) pool[i] = i + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(floor_mul(alpha, static_cast<long double>(n)));
    auto a = PartSet::of(pool).unite(random_subset(rng, n + 1, m, 0.3));
    auto r = audit_liminf_upper_main(a, alpha, n);
    ASSERT_TRUE(r.preconditions_met);
    ASSERT_TRUE(r.pass) << a.to_string();
    ASSERT_EQ(r.param("split_identity"), "true");
  }
}

TEST(Pigeonhole, SmallExample) {
  auto r = audit_pigeonhole(PartSet{{1, 2}, {7, 8}}, 8);
  EXPECT_TRUE(r.preconditions_met);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.param("window_lo"), "4");
  EXPECT_EQ(r.param("window_hi"), "28");
  EXPECT_EQ(r.param("argmax"), "28");
  EXPECT_EQ(*r.lhs_exact, 74);
  EXPECT_EQ(*r.rhs_exact, 1);
}

TEST(Pigeonhole, FullInterval) {
  for (std::uint64_t m = 2; m <= 40; ++m) {
    auto r = audit_pigeonhole(PartSet::range(1, m), m);
    ASSERT_TRUE(r.preconditions_met) << m;
    ASSERT_TRUE(r.pass) << m;
  }
}

TEST(Pigeonhole, TwoElementsDegenerate) {
  auto r = audit_pigeonhole(PartSet{{3, 3}, {9, 9}}, 10);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(*r.rhs_exact, 1);
  EXPECT_FALSE(audit_pigeonhole(PartSet{{3, 3}}, 10).preconditions_met);
}

TEST(Pigeonhole, RandomSets) {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 50; ++iter) {
    std::uint64_t m = 2 + rng() % 59;
    auto a = random_subset(rng, 1, m, 0.4);
    auto r = audit_pigeonhole(a, m);
    expect_consistent(r);
    if (a.size() >= 2) ASSERT_TRUE(r.pass) << a.to_string() << " m=" << m;
  }
}

TEST(IntervalUpper, Examples) {
  auto r = audit_interval_upper(0.5, 4, 7);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(*r.lhs_exact, 1);
  EXPECT_NEAR(std::exp(r.rhs.log()), std::exp(2 * std::log(2.0) * std::sqrt(7.0)), 1e-9);

  for (std::uint64_t n = 1; n <= 4; ++n)
    for (std::uint64_t m = 0; m <= 30; ++m) EXPECT_TRUE(audit_interval_upper(0.25, n, m).pass);
}

TEST(IntervalUpper, RangeAgreesWithPointwise) {
  auto range = audit_interval_upper_range(0.5, 20, 150);
  EXPECT_TRUE(range.pass);
  auto worst = std::stoull(range.param("worst_m"));
  auto point = audit_interval_upper(0.5, 20, worst);
  EXPECT_NEAR(point.slack, range.slack, 1e-12);
  for (std::uint64_t m = 0; m <= 150; ++m) EXPECT_GE(audit_interval_upper(0.5, 20, m).slack, range.slack - 1e-12);
}

TEST(IntervalUpper, CoarseGrid) {
  for (double beta : {0.25, 0.5, 0.75})
    for (std::uint64_t n = 1; n <= 300; n += 13) ASSERT_TRUE(audit_interval_upper_range(beta, n, 2000).pass);
}

TEST(EntropyBinomial, Examples) {
  auto r = entropy_binomial_bound(10, 5);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(*r.lhs_exact, 252);
  EXPECT_NEAR(r.rhs.log(), 10 * std::log(2.0), 1e-12);
  auto zero = entropy_binomial_bound(7, 0);
  EXPECT_TRUE(zero.pass);
  EXPECT_DOUBLE_EQ(zero.slack, 0.0);
  EXPECT_TRUE(entropy_binomial_bound(7, 7).pass);
}

TEST(EntropyBinomial, RowsAgreeWithPointwise) {
  for (std::uint64_t n = 1; n <= 120; ++n) {
    auto row = entropy_binomial_row(n);
    ASSERT_TRUE(row.pass) << n;
    auto k = std::stoull(row.param("worst_k"));
    EXPECT_NEAR(entropy_binomial_bound(n, k).slack, row.slack, 1e-9);
  }
}

TEST(FbetaPeak, Examples) {
  auto half = audit_fbeta_peak(0.5, default_fbeta_grid(0.5));
  EXPECT_TRUE(half.pass);
  EXPECT_NEAR(std::stod(half.param("argmax_gamma")), 0.25, 0.25 / 1000);
  EXPECT_NEAR(std::stod(half.param("max_value")), 2.0, 1e-9);

  auto quarter = audit_fbeta_peak(0.25, default_fbeta_grid(0.25));
  EXPECT_TRUE(quarter.pass);
  EXPECT_LE(std::stod(quarter.param("max_value")), 2.0 * std::sqrt(1.0 / 3.0) + 1e-9);
}

TEST(FbetaPeak, AllBetas) {
  for (int i = 1; i <= 9; ++i) {
    double beta = i / 10.0;
    auto r = audit_fbeta_peak(beta, default_fbeta_grid(beta));
    EXPECT_TRUE(r.pass) << beta;
    EXPECT_EQ(r.param("g_sign_pattern"), "true");
    EXPECT_EQ(r.param("argmax_within_step"), "true");
  }
}

TEST(FbetaPeak, GridMissingThePeakStillBounded) {
  // coarse grid with no point near a = 0.21: the bound still holds
  std::vector<double> grid{0.01, 0.5, 1.0, 2.0};
  auto r = audit_fbeta_peak(0.3, grid);
  EXPECT_LE(std::stod(r.param("max_value")), 2.0 * std::sqrt(0.3 / 0.7) + 1e-9);
}

TEST(AuditProperty, PassImpliesPreconditions) {
  std::mt19937_64 rng(19);
  for (int iter = 0; iter < 100; ++iter) {
    std::uint64_t n = rng() % 40, k = rng() % 8;
    expect_consistent(audit_pk_sandwich(n, k));
    expect_consistent(audit_shift_identity(n, k));
    expect_consistent(stars_bars_injection_bound(n, k, rng() % 4, rng() % 50));
    expect_consistent(shift_bijection_bound(k, rng() % 5, n));
    expect_consistent(audit_trivial_bound(random_subset(rng, 1, 15, 0.3), n));
  }
}
