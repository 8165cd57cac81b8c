#include "partfn/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "partfn/csv.hpp"
#include "partfn/parallel.hpp"
#include "partfn/partition_core.hpp"

namespace partfn {

namespace {

using Clock = std::chrono::steady_clock;

// Values of log p(n) / (pi sqrt(2n/3)) computed once and kept as a
// regression reference.
constexpr double kHrRatio1e3 = 0.8908050744366758;
constexpr double kHrRatio1e4 = 0.9565304327523738;
constexpr double kHrRegressionTol = 1e-9;

struct Counter {
  std::size_t checked = 0;
  std::size_t failed = 0;
  void add(bool ok) {
    ++checked;
    failed += !ok;
  }
  std::string summary() const { return std::to_string(checked) + " checked, " + std::to_string(failed) + " failed"; }
};

// Subset of [1, bits] from the low bits of a draw.
PartSet subset_from_bits(std::uint64_t draw, std::uint64_t bits) {
  std::vector<std::uint64_t> xs;
  for (std::uint64_t x = 1; x <= bits; ++x)
    if (draw >> (x - 1) & 1) xs.push_back(x);
  return PartSet::of(xs);
}

// Subset of [1, m] keeping each element with probability permille / 1000.
PartSet random_subset(std::mt19937_64& rng, std::uint64_t m, std::uint64_t permille) {
  std::vector<std::uint64_t> xs;
  for (std::uint64_t x = 1; x <= m; ++x)
    if (rng() % 1000 < permille) xs.push_back(x);
  return PartSet::of(xs);
}

double hr_ratio(std::uint64_t n) {
  return LogMag::of(count_partitions(n)).log() / (std::numbers::pi * std::sqrt(2.0 * static_cast<double>(n) / 3.0));
}

class Suite {
 public:
  Suite(const AcceptanceOptions& opt, const std::function<void(const CriterionResult&)>& cb)
      : opt_(opt), cb_(cb) {}

  AcceptanceReport run() {
    timed(1, "oracle-equivalence", 60.0, [this] { return oracle_equivalence(); });
    timed(2, "identity-suite", 0.0, [this] { return identity_suite(); });
    timed(3, "hardy-ramanujan", 30.0, [this] { return hardy_ramanujan(); });
    timed(4, "szekeres-constants", 60.0, [this] { return szekeres(); });
    timed(5, "dixmier-nicolas-upper", 0.0, [this] { return dixmier_nicolas(); });
    timed(6, "entropy-interval", 0.0, [this] { return entropy_interval(); });
    timed(7, "pigeonhole", 0.0, [this] { return pigeonhole(); });
    timed(8, "construction-densities", 0.0, [this] { return densities(); });
    timed(9, "ratio-separation", 600.0, [this] { return ratio_separation(); });
    return std::move(report_);
  }

 private:
  struct Outcome {
    bool pass;
    std::string detail;
  };

  template <class F>
  void timed(int id, const char* name, double limit_seconds, F&& body) {
    auto start = Clock::now();
    Outcome o = body();
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    CriterionResult r{id, name, o.pass, std::move(o.detail), secs};
    if (limit_seconds > 0 && secs >= limit_seconds) {
      r.pass = false;
      r.detail += "; over time budget";
    }
    report_.criteria.push_back(r);
    if (cb_) cb_(report_.criteria.back());
  }

  void keep(std::vector<BoundReport> reports, Counter& c) {
    for (auto& r : reports) {
      c.add(r.preconditions_met && r.pass);
      report_.audits.push_back(std::move(r));
    }
  }

  Outcome oracle_equivalence() {
    struct Case {
      PartSet a;
      std::uint64_t n;
    };
    std::vector<Case> cases;
    std::mt19937_64 rng(1001);
    for (int i = 0; i < 500; ++i) {
      auto a = subset_from_bits(rng(), 20);
      cases.push_back({a, rng() % 26});
    }
    for (std::uint64_t k = 0; k <= 10; ++k)
      for (std::uint64_t n = 0; n <= 25; ++n) cases.push_back({PartSet::range(1, k), n});
    auto ok = parallel_map<char>(cases.size(), opt_.threads, [&](std::size_t i) {
      return static_cast<char>(count_restricted(cases[i].a, cases[i].n) == brute_force_count(cases[i].a, cases[i].n));
    });
    Counter c;
    for (char v : ok) c.add(v);
    return {c.failed == 0, "mismatches: " + c.summary()};
  }

  Outcome identity_suite() {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> grid;
    for (std::uint64_t n = 0; n <= 60; ++n)
      for (std::uint64_t k = 1; k <= 12; ++k) grid.emplace_back(n, k);
    auto shift = parallel_map<BoundReport>(grid.size(), opt_.threads,
                                           [&](std::size_t i) { return audit_shift_identity(grid[i].first, grid[i].second); });
    std::erase_if(grid, [](const auto& g) { return g.first == 0; });
    auto sandwich = parallel_map<BoundReport>(grid.size(), opt_.threads,
                                              [&](std::size_t i) { return audit_pk_sandwich(grid[i].first, grid[i].second); });
    Counter cs, cp, cv;
    keep(std::move(shift), cs);
    keep(std::move(sandwich), cp);

    std::mt19937_64 rng(1002);
    for (int i = 0; i < 100; ++i) {
      auto a = random_subset(rng, 200, 150);
      std::uint64_t m = rng() % 201;
      std::uint64_t t = rng() % (m + 1);
      auto low = restricted_table(a.restrict_to(1, t), m);
      auto high = restricted_table(a.restrict_to(t + 1, PartSet::kMaxElement), m);
      Count sum;
      for (std::uint64_t k = 0; k <= m; ++k) sum += low[k] * high[m - k];
      cv.add(sum == count_restricted(a, m));
    }
    bool pass = cs.failed == 0 && cp.failed == 0 && cv.failed == 0;
    return {pass, "shift identity " + cs.summary() + "; sandwich " + cp.summary() + "; convolution split " +
                      cv.summary()};
  }

  Outcome hardy_ramanujan() {
    double r3 = hr_ratio(1000), r4 = hr_ratio(10000);
    bool band = r4 >= 0.94 && r4 <= 1.0;
    bool increasing = r3 < r4;
    bool locked = std::fabs(r3 - kHrRatio1e3) <= kHrRegressionTol && std::fabs(r4 - kHrRatio1e4) <= kHrRegressionTol;
    return {band && increasing && locked, "ratio(1e3)=" + format_real(r3) + " ratio(1e4)=" + format_real(r4) +
                                              " band=" + (band ? "ok" : "off") +
                                              " increasing=" + (increasing ? "yes" : "no") +
                                              " regression=" + (locked ? "ok" : "drift")};
  }

  Outcome szekeres() {
    const std::pair<double, std::uint64_t> points[] = {{0.9, 1000}, {0.5, 4000}};
    Counter c;
    std::string detail;
    for (auto [gamma, n] : points) {
      auto r = audit_szekeres(gamma, n);
      detail += (detail.empty() ? "" : "; ") + std::string("gamma=") + format_real(gamma) + " n=" + std::to_string(n) +
                " k=" + r.param("k") + " log p=" + format_log(r.lhs) + " in [" + r.param("lower_exp") + ", " +
                format_log(r.rhs) + "]";
      report_.audits.push_back(r);
      c.add(r.preconditions_met && r.pass);
    }
    return {c.failed == 0, detail};
  }

  Outcome dixmier_nicolas() {
    Counter cu, cb;
    const std::pair<double, std::uint64_t> points[] = {{2.0, 400}, {4.0, 2500}};
    std::vector<BoundReport> upper;
    for (auto [lambda, n] : points) upper.push_back(audit_dixmier_nicolas_upper(lambda, n));
    keep(std::move(upper), cu);

    std::vector<std::array<std::uint64_t, 3>> grid;
    for (std::uint64_t lower = 1; lower <= 10; ++lower)
      for (std::uint64_t k = 1; k <= 6; ++k)
        for (std::uint64_t n = 0; n <= 120; ++n) grid.push_back({lower, k, n});
    keep(parallel_map<BoundReport>(grid.size(), opt_.threads,
                                   [&](std::size_t i) { return shift_bijection_bound(grid[i][0], grid[i][1], grid[i][2]); }),
         cb);
    return {cu.failed == 0 && cb.failed == 0, "upper constant " + cu.summary() + "; shift bijection " + cb.summary()};
  }

  Outcome entropy_interval() {
    Counter ce, ci, cf;
    keep(parallel_map<BoundReport>(500, opt_.threads, [](std::size_t i) { return entropy_binomial_row(i + 1); }), ce);

    std::vector<std::pair<double, std::uint64_t>> grid;
    for (double beta : {0.25, 0.5, 0.75})
      for (std::uint64_t n = 1; n <= 300; ++n) grid.emplace_back(beta, n);
    auto interval = parallel_map<BoundReport>(grid.size(), opt_.threads, [&](std::size_t i) {
      return audit_interval_upper_range(grid[i].first, grid[i].second, 2000);
    });
    std::size_t marginal = std::count_if(interval.begin(), interval.end(), [](const auto& r) { return r.marginal; });
    keep(std::move(interval), ci);

    std::vector<BoundReport> peaks;
    for (int j = 1; j <= 9; ++j) {
      double beta = j / 10.0;
      peaks.push_back(audit_fbeta_peak(beta, default_fbeta_grid(beta)));
    }
    keep(std::move(peaks), cf);
    bool pass = ce.failed == 0 && ci.failed == 0 && cf.failed == 0;
    return {pass, "entropy rows " + ce.summary() + "; interval upper " + ci.summary() + " (" +
                      std::to_string(marginal) + " marginal); f_beta peak " + cf.summary()};
  }

  Outcome pigeonhole() {
    std::mt19937_64 rng(1007);
    std::vector<std::pair<PartSet, std::uint64_t>> cases;
    while (cases.size() < 50) {
      std::uint64_t m = 2 + rng() % 59;
      auto a = random_subset(rng, m, 100 + rng() % 800);
      if (a.size() >= 2) cases.emplace_back(std::move(a), m);
    }
    Counter c;
    keep(parallel_map<BoundReport>(cases.size(), opt_.threads,
                                   [&](std::size_t i) { return audit_pigeonhole(cases[i].first, cases[i].second); }),
         c);
    return {c.failed == 0, "window bound " + c.summary()};
  }

  Outcome densities() {
    LowerFamilyParams lp{1.0 / 16, 32, 1'000'000};
    auto lf = lower_family_checkpoints(lp);
    report_.lower_density = density_profile(build_lower_set(lp), lf, lp.cap);
    Counter cl;
    std::string detail = "lower";
    for (std::size_t i = 1; i < lf.size(); ++i) {
      double dev = std::fabs(report_.lower_density[i].density - lp.alpha);
      cl.add(dev <= 2.0 / static_cast<double>(lf[i - 1]));
      detail += " d(" + std::to_string(lf[i]) + ")=" + format_real(report_.lower_density[i].density);
    }

    UpperFamilyParams up{0.5, 100'000};
    auto uf = upper_family_checkpoints(up);
    report_.upper_density = density_profile(build_upper_set(up), uf, up.cap);
    Counter cu;
    detail += "; upper";
    for (std::size_t i = 0; i < uf.size(); ++i) {
      double f = static_cast<double>(uf[i]);
      double dev = std::fabs(report_.upper_density[i].density - up.beta);
      cu.add(dev <= 2.0 * std::log2(f) / f);
      detail += " d(" + std::to_string(uf[i]) + ")=" + format_real(report_.upper_density[i].density);
    }
    bool pass = cl.failed == 0 && cu.failed == 0 && cl.checked > 0 && cu.checked > 0;
    return {pass, detail};
  }

  Outcome ratio_separation() {
    // Lower family, alpha = 1/32, default n0 = 64: the gap region of n = f(1).
    LowerFamilyParams lp{1.0 / 32, LowerFamilyParams::default_n0(1.0 / 32), 0};
    GapRegion region = gap_region(lp.alpha, lp.n0);
    lp.cap = region.hi;
    PartSet lower = build_lower_set(lp);
    std::vector<std::uint64_t> lm;
    for (std::uint64_t m = region.lo; m <= region.hi; m += m / 4) lm.push_back(m);
    if (lm.back() != region.hi) lm.push_back(region.hi);
    report_.lower_ratio = ratio_curve(lower, lp.alpha, lm, lp.cap);

    // Upper family, beta = 1/32: f(0) = 32 and f(1) = 2^32. The only
    // reachable checkpoint has p(floor(beta f(0))) = p(1) = 1, so the curve
    // is sampled at f(0) 2^j up to the materialization cap instead.
    UpperFamilyParams up{1.0 / 32, 1u << 16};
    PartSet upper = build_upper_set(up);
    std::vector<std::uint64_t> um;
    for (std::uint64_t m = 2 * up.n0(); m <= up.cap; m *= 2) um.push_back(m);
    report_.upper_ratio = ratio_curve(upper, up.beta, um, up.cap);

    double lo_min = INFINITY, up_max = -INFINITY;
    for (const auto& s : report_.lower_ratio) lo_min = std::min(lo_min, s.ratio);
    for (const auto& s : report_.upper_ratio) up_max = std::max(up_max, s.ratio);
    bool separated = lo_min > 1.0 && up_max < 1.0;
    bool locked = lo_min >= kLowerRatioFloor && up_max <= kUpperRatioCeiling;
    return {separated && locked,
            "lower alpha=1/32 m in [" + std::to_string(region.lo) + ", " + std::to_string(region.hi) + "] " +
                std::to_string(lm.size()) + " samples min ratio " + format_real(lo_min) + " (floor " +
                format_real(kLowerRatioFloor) + "); upper beta=1/32 " + std::to_string(um.size()) +
                " samples max ratio " + format_real(up_max) + " (ceiling " + format_real(kUpperRatioCeiling) + ")"};
  }

  const AcceptanceOptions& opt_;
  const std::function<void(const CriterionResult&)>& cb_;
  AcceptanceReport report_;
};

}  // namespace

bool AcceptanceReport::all_pass() const {
  return !criteria.empty() && std::all_of(criteria.begin(), criteria.end(), [](const auto& c) { return c.pass; });
}

std::vector<std::pair<std::string, std::string>> acceptance_csv_files(const AcceptanceReport& report) {
  CsvTable criteria{{"id", "name", "pass", "detail"}, {}};
  for (const auto& c : report.criteria)
    criteria.add_row({std::to_string(c.id), c.name, c.pass ? "true" : "false", c.detail});
  return {
      {"criteria.csv", to_csv(criteria)},
      {"audits.csv", to_csv(audit_csv(report.audits))},
      {"density_lower.csv", to_csv(density_csv(report.lower_density))},
      {"density_upper.csv", to_csv(density_csv(report.upper_density))},
      {"ratio_lower.csv", to_csv(ratio_csv(report.lower_ratio))},
      {"ratio_upper.csv", to_csv(ratio_csv(report.upper_ratio))},
  };
}

AcceptanceReport run_acceptance(const AcceptanceOptions& options,
                                const std::function<void(const CriterionResult&)>& on_result) {
  AcceptanceReport report = Suite(options, on_result).run();
  if (!options.check_determinism) return report;

  auto start = Clock::now();
  AcceptanceOptions again = options;
  again.threads = 1;
  AcceptanceReport second = Suite(again, {}).run();
  auto first_files = acceptance_csv_files(report);
  auto second_files = acceptance_csv_files(second);
  std::string differing;
  for (std::size_t i = 0; i < first_files.size(); ++i)
    if (first_files[i].second != second_files[i].second)
      differing += (differing.empty() ? "" : ",") + first_files[i].first;
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  CriterionResult r{10, "determinism", differing.empty(),
                    differing.empty() ? std::to_string(first_files.size()) + " CSV files byte-identical across two runs"
                                      : "differing: " + differing,
                    secs};
  report.criteria.push_back(r);
  if (on_result) on_result(r);
  return report;
}

std::string format_criterion_line(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
  return std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + " (" + secs +
         "): " + r.detail;
}

}  // namespace partfn
