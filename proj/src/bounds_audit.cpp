#include "partfn/bounds_audit.hpp"

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "partfn/constructions.hpp"
#include "partfn/partition_core.hpp"
#include "partfn/scalar_functions.hpp"

namespace partfn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr std::array<std::pair<LemmaId, std::string_view>, 14> kLemmaNames{{
    {LemmaId::trivial_bound, "trivial-bound"},
    {LemmaId::pk_sandwich, "pk-sandwich"},
    {LemmaId::shift_identity, "shift-identity"},
    {LemmaId::first_is_best, "first-is-best"},
    {LemmaId::stars_bars_injection, "stars-bars-injection"},
    {LemmaId::liminf_lower_main, "liminf-lower-main"},
    {LemmaId::szekeres, "szekeres"},
    {LemmaId::shift_bijection, "shift-bijection"},
    {LemmaId::dixmier_nicolas_upper, "dixmier-nicolas-upper"},
    {LemmaId::liminf_upper_main, "liminf-upper-main"},
    {LemmaId::pigeonhole, "pigeonhole"},
    {LemmaId::interval_upper, "interval-upper"},
    {LemmaId::entropy_binomial, "entropy-binomial"},
    {LemmaId::fbeta_peak, "fbeta-peak"},
}};

std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_int(std::uint64_t v) { return std::to_string(v); }

std::string fmt_bool(bool v) { return v ? "true" : "false"; }

BoundReport make(LemmaId id, Relation rel, ParamList params) {
  BoundReport r;
  r.lemma = id;
  r.relation = rel;
  r.params = std::move(params);
  return r;
}

bool exact_holds(const Count& lhs, const Count& rhs, Relation rel) {
  switch (rel) {
    case Relation::leq: return lhs <= rhs;
    case Relation::geq: return lhs >= rhs;
    case Relation::eq: return lhs == rhs;
  }
  return false;
}

// Decides on integers.
void finish_exact(BoundReport& r, Count lhs, Count rhs) {
  r.lhs = LogMag::of(lhs);
  r.rhs = LogMag::of(rhs);
  r.slack = log_slack(r.lhs, r.rhs, r.relation);
  r.pass = r.preconditions_met && exact_holds(lhs, rhs, r.relation);
  if (r.relation == Relation::eq && !exact_holds(lhs, rhs, r.relation) && r.slack == 0.0)
    r.slack = -std::numeric_limits<double>::min();  // unequal counts too close to resolve in log form
  r.lhs_exact = std::move(lhs);
  r.rhs_exact = std::move(rhs);
}

// Decides in log form with the guard band in the RHS's favour.
void finish_log(BoundReport& r, LogMag lhs, LogMag rhs) {
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = log_slack(lhs, rhs, r.relation);
  bool strict = r.slack >= 0.0;
  bool guarded = r.slack >= -kGuardBand;
  r.pass = r.preconditions_met && guarded;
  r.marginal = r.pass && !strict;
}

// A real exponent e as the magnitude exp(e); nonpositive exponents are still
// positive magnitudes, so no sentinel is involved.
LogMag exp_mag(double exponent) { return LogMag::from_log(exponent); }

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

std::string_view lemma_name(LemmaId id) {
  for (const auto& [k, v] : kLemmaNames)
    if (k == id) return v;
  return "unknown";
}

std::optional<LemmaId> lemma_from_name(std::string_view name) {
  for (const auto& [k, v] : kLemmaNames)
    if (v == name) return k;
  return std::nullopt;
}

std::span<const LemmaId> all_lemmas() {
  static const std::array<LemmaId, 14> ids = [] {
    std::array<LemmaId, 14> out{};
    for (std::size_t i = 0; i < kLemmaNames.size(); ++i) out[i] = kLemmaNames[i].first;
    return out;
  }();
  return ids;
}

std::string BoundReport::param(std::string_view name) const {
  for (const auto& [k, v] : params)
    if (k == name) return v;
  return {};
}

void Thresholds::validate() const {
  if (n1 == 0 || n2 == 0 || n3 == 0 || !(alpha0 > 0) || !(lambda0 > 0) || !(loglog_coeff > 0))
    throw std::invalid_argument("Thresholds: all values must be positive");
}

double log_slack(const LogMag& lhs, const LogMag& rhs, Relation rel) {
  if (rel == Relation::eq) {
    if (lhs.is_zero() && rhs.is_zero()) return 0.0;
    if (lhs.is_zero() || rhs.is_zero()) return -kInf;
    return -std::fabs(lhs.log() - rhs.log());
  }
  const LogMag& small = rel == Relation::leq ? lhs : rhs;
  const LogMag& big = rel == Relation::leq ? rhs : lhs;
  if (small.is_zero()) return big.is_zero() ? 0.0 : kInf;
  if (big.is_zero()) return -kInf;
  return big.log() - small.log();
}

BoundReport audit_trivial_bound(const PartSet& a, std::uint64_t n) {
  std::uint64_t k = a.size();
  auto r = make(LemmaId::trivial_bound, Relation::leq,
                {{"set", a.to_string()}, {"n", fmt_int(n)}, {"size", fmt_int(k)}});
  r.preconditions_met = true;
  Count lhs = count_restricted(a, n);
  double rhs_log = static_cast<double>(k) * std::log(static_cast<double>(n) + 1.0);
  // Materialize (n+1)^k only while it stays a modest integer.
  if (rhs_log < 1e6) {
    Count rhs;
    mpz_ui_pow_ui(rhs.get_mpz_t(), n + 1, k);
    finish_exact(r, std::move(lhs), std::move(rhs));
  } else {
    finish_log(r, LogMag::of(lhs), exp_mag(rhs_log));
    r.lhs_exact = std::move(lhs);
  }
  return r;
}

BoundReport audit_pk_sandwich(std::uint64_t n, std::uint64_t k) {
  auto r = make(LemmaId::pk_sandwich, Relation::leq, {{"n", fmt_int(n)}, {"k", fmt_int(k)}});
  r.preconditions_met = n >= 1 && k >= 1;
  if (!r.preconditions_met) return r;
  Count lower = binomial(n - 1, k - 1);
  Count middle = factorial(k) * count_exact_parts(n, k);
  Count upper = binomial(n + k * (k - 1) / 2 - 1, k - 1);
  r.params.emplace_back("lower", lower.get_str());
  bool lower_ok = lower <= middle;
  double lower_slack = log_slack(LogMag::of(middle), LogMag::of(lower), Relation::geq);
  finish_exact(r, middle, upper);
  r.pass = r.pass && lower_ok;
  r.slack = std::min(r.slack, lower_slack);
  return r;
}

BoundReport audit_shift_identity(std::uint64_t n, std::uint64_t k) {
  auto r = make(LemmaId::shift_identity, Relation::eq, {{"n", fmt_int(n)}, {"k", fmt_int(k)}});
  r.preconditions_met = k >= 1;
  if (!r.preconditions_met) return r;
  finish_exact(r, count_parts_leq(k, n), count_exact_parts(n + k, k));
  return r;
}

BoundReport audit_first_is_best(const PartSet& a, std::uint64_t n) {
  std::uint64_t k = a.size();
  auto r = make(LemmaId::first_is_best, Relation::leq,
                {{"set", a.to_string()}, {"n", fmt_int(n)}, {"size", fmt_int(k)}});
  r.preconditions_met = true;
  finish_exact(r, count_restricted(a, n), count_restricted(PartSet::range(1, k), n));
  return r;
}

BoundReport stars_bars_injection_bound(std::uint64_t n, std::uint64_t big_k, std::uint64_t s,
                                       std::uint64_t m) {
  auto r = make(LemmaId::stars_bars_injection, Relation::geq,
                {{"n", fmt_int(n)}, {"K", fmt_int(big_k)}, {"s", fmt_int(s)}, {"m", fmt_int(m)}});
  r.preconditions_met = n >= 2 && s * (n + big_k) <= m;
  if (!r.preconditions_met) return r;
  PartSet b = PartSet::range(1, 1).unite(PartSet::range(n, n + big_k));
  finish_exact(r, count_restricted(b, m), stars_and_bars(s, big_k + 1));
  return r;
}

std::optional<InjectionParams> liminf_injection_params(double alpha, std::uint64_t n, std::uint64_t m) {
  long double nn = n, mm = m, a = alpha;
  // Products of a non-representable alpha land a few ulps off integers;
  // compare and floor with the same snapping as the gap region.
  auto le = [](long double x, long double y) { return x <= y + 8.0L * DBL_EPSILON * std::fabs(y); };
  auto snap_floor = [](long double v) { return floor_mul(1.0, v); };
  long double r = std::sqrt(mm / (16.0L * a));
  long double t = 2.0L * std::sqrt(a * mm);
  std::uint64_t top = floor_mul(alpha, nn * nn);
  auto fits = [&](std::uint64_t big_k, std::uint64_t s) {
    return n + big_k <= top && static_cast<long double>(s) * (n + big_k) <= mm;
  };
  if (le(16.0L * a * nn * nn, mm) && le(mm, 4.0L * a * a * a * nn * nn * nn * nn)) {
    InjectionParams p{snap_floor(r), snap_floor(t), 1};
    if (fits(p.big_k, p.s)) return p;
  }
  if (le(nn * nn / (4.0L * a), mm) && le(mm, a * nn * nn * nn * nn / 16.0L)) {
    InjectionParams p{snap_floor(t), snap_floor(r), 2};
    if (fits(p.big_k, p.s)) return p;
  }
  return std::nullopt;
}

BoundReport audit_liminf_lower_main(double alpha, std::uint64_t n, std::uint64_t m, const Thresholds& t) {
  require(alpha > 0.0 && alpha < 1.0, "audit_liminf_lower_main: alpha must lie in (0,1)");
  t.validate();
  auto r = make(LemmaId::liminf_lower_main, Relation::geq,
                {{"alpha", fmt_real(alpha)}, {"n", fmt_int(n)}, {"m", fmt_int(m)}});
  GapRegion region = gap_region(alpha, n);
  r.params.emplace_back("region_lo", fmt_int(region.lo));
  r.params.emplace_back("region_hi", fmt_int(region.hi));
  r.preconditions_met = !region.empty() && region.lo <= m && m <= region.hi && n > t.n1;
  // Proof-side sufficient conditions, reported only.
  r.params.emplace_back("n_ge_2_over_alpha", fmt_bool(static_cast<double>(n) >= 2.0 / alpha));
  r.params.emplace_back("n_ge_4_over_alpha2", fmt_bool(static_cast<double>(n) >= 4.0 / (alpha * alpha)));
  double rhs_exp = (2.0 * std::log(1.0 / alpha) - 8.0) * std::sqrt(alpha * static_cast<double>(m));
  if (auto inj = liminf_injection_params(alpha, n, m)) {
    r.params.emplace_back("case", std::to_string(inj->range_case));
    r.params.emplace_back("K", fmt_int(inj->big_k));
    r.params.emplace_back("s", fmt_int(inj->s));
    r.params.emplace_back("injection_log", fmt_real(LogMag::of(stars_and_bars(inj->s, inj->big_k + 1)).log()));
  }
  if (!r.preconditions_met) return r;
  PartSet a = PartSet::range(1, 1).unite(PartSet::range(n, floor_mul(alpha, static_cast<long double>(n) * n)));
  finish_log(r, log_count_restricted(a, m), exp_mag(rhs_exp));
  r.trivial = rhs_exp <= 0.0;
  return r;
}

BoundReport audit_szekeres(double gamma, std::uint64_t n, const Thresholds& t) {
  require(gamma > 0.0 && gamma < 1.0, "audit_szekeres: gamma must lie in (0,1)");
  t.validate();
  double root = std::sqrt(static_cast<double>(n));
  double gk = gamma * root;
  std::uint64_t k = static_cast<std::uint64_t>(std::floor(gk));
  auto r = make(LemmaId::szekeres, Relation::leq,
                {{"gamma", fmt_real(gamma)}, {"n", fmt_int(n)}, {"k", fmt_int(k)}});
  bool c1 = static_cast<double>(n) > 1.0 / (gamma * gamma);
  bool c2 = std::log(std::numbers::e * static_cast<double>(n)) <= gk / 2.0;
  bool c3 = gk + static_cast<double>(k) * (static_cast<double>(k) - 1.0) / 2.0 - 1.0 <= static_cast<double>(n);
  r.params.emplace_back("cond_n_gt_inv_gamma2", fmt_bool(c1));
  r.params.emplace_back("cond_log_en", fmt_bool(c2));
  r.params.emplace_back("cond_binomial", fmt_bool(c3));
  r.preconditions_met = c1 && c2 && c3 && k >= 1 && n > t.n2;
  double base = 2.0 * gamma * std::log(1.0 / gamma);
  double lower_exp = (base + gamma / 2.0) * root;
  double upper_exp = (base + 4.0 * gamma) * root;
  r.params.emplace_back("lower_exp", fmt_real(lower_exp));
  if (k == 0) return r;
  LogMag value = LogMag::of(count_parts_leq(k, n));
  finish_log(r, value, exp_mag(upper_exp));
  double lower_slack = log_slack(value, exp_mag(lower_exp), Relation::geq);
  r.slack = std::min(r.slack, lower_slack);
  r.pass = r.preconditions_met && r.slack >= -kGuardBand;
  r.marginal = r.pass && r.slack < 0.0;
  return r;
}

BoundReport shift_bijection_bound(std::uint64_t lower, std::uint64_t k, std::uint64_t n) {
  auto r = make(LemmaId::shift_bijection, Relation::geq,
                {{"L", fmt_int(lower)}, {"k", fmt_int(k)}, {"n", fmt_int(n)}});
  r.preconditions_met = lower >= 1 && k >= 1;
  if (!r.preconditions_met) return r;
  Count rhs = n >= k * lower ? count_exact_parts(n - k * lower, k) : Count(0);
  finish_exact(r, count_restricted(PartSet::range(lower, n), n), std::move(rhs));
  return r;
}

BoundReport audit_dixmier_nicolas_upper(double lambda, std::uint64_t n, const Thresholds& t) {
  t.validate();
  double root = std::sqrt(static_cast<double>(n));
  std::uint64_t lower = ceil_mul(lambda, std::sqrt(static_cast<long double>(n)));
  auto r = make(LemmaId::dixmier_nicolas_upper, Relation::leq,
                {{"lambda", fmt_real(lambda)}, {"n", fmt_int(n)}, {"L", fmt_int(lower)}});
  double nd = static_cast<double>(n);
  bool c1 = lambda > 1.0 && lambda >= t.lambda0;
  bool c2 = root / lambda <= nd;
  bool c3 = root / lambda - 1.0 <= 1.5 * nd;
  r.preconditions_met = c1 && c2 && c3 && n >= 1 && n > t.n3;
  // The matching lower estimate needs loglog(lambda) >= 4; report whether
  // this lambda is in that regime.
  bool lower_feasible = lambda > std::numbers::e && std::log(std::log(lambda)) >= 4.0;
  r.params.emplace_back("explicit_lower_feasible", fmt_bool(lower_feasible));
  if (!r.preconditions_met) return r;
  double rhs_exp = (2.0 * std::log(lambda) + 4.0) / lambda * root;
  finish_log(r, LogMag::of(count_restricted(PartSet::range(lower, n), n)), exp_mag(rhs_exp));
  return r;
}

BoundReport audit_liminf_upper_main(const PartSet& a, double alpha, std::uint64_t n, const Thresholds& t) {
  require(alpha > 0.0 && alpha < 1.0, "audit_liminf_upper_main: alpha must lie in (0,1)");
  t.validate();
  std::uint64_t m = floor_mul(alpha, static_cast<long double>(n) * n);
  std::uint64_t want = floor_mul(alpha, static_cast<long double>(n));
  std::uint64_t have = a.prefix_count(n);
  auto r = make(LemmaId::liminf_upper_main, Relation::leq,
                {{"set", a.restrict_to(1, std::max(m, n)).to_string()},
                 {"alpha", fmt_real(alpha)},
                 {"n", fmt_int(n)},
                 {"m", fmt_int(m)},
                 {"prefix_count", fmt_int(have)}});
  r.preconditions_met = have == want && m >= 1 && alpha < t.alpha0;
  if (!r.preconditions_met) return r;

  PartSet a1 = a.restrict_to(1, n);
  PartSet a2 = a.restrict_to(n + 1, m);
  auto t1 = restricted_table(a1, m);
  auto t2 = restricted_table(a2, m);
  Count total = count_restricted(a, m);

  Count split;
  for (std::uint64_t k = 0; k <= m; ++k) split += t1[k] * t2[m - k];
  bool identity = split == total;
  r.params.emplace_back("split_identity", fmt_bool(identity));

  Count max1 = *std::max_element(t1.begin(), t1.end());
  Count max2 = *std::max_element(t2.begin(), t2.end());
  Count skeleton = Count(m + 1) * max1 * max2;
  finish_exact(r, total, skeleton);
  r.pass = r.pass && identity;

  double ll = std::log(std::log(1.0 / alpha));
  double c_exp = (2.0 * std::log(1.0 / alpha) + t.loglog_coeff * ll) * std::sqrt(alpha * static_cast<double>(m));
  r.params.emplace_back("loglog_coeff", fmt_real(t.loglog_coeff));
  r.params.emplace_back("explicit_c_exp", fmt_real(c_exp));
  r.params.emplace_back("explicit_c_holds", fmt_bool(std::isfinite(c_exp) && r.lhs.log_or(-kInf) <= c_exp));
  return r;
}

BoundReport audit_pigeonhole(const PartSet& a, std::uint64_t m) {
  std::uint64_t s = a.size();
  std::uint64_t h = s / 2;
  auto r = make(LemmaId::pigeonhole, Relation::geq,
                {{"set", a.to_string()}, {"m", fmt_int(m)}, {"size", fmt_int(s)}});
  bool inside = a.empty() || (*a.max() <= m);
  // window [s^2/4, s m - s^2/4] in integers
  std::uint64_t lo = (s * s + 3) / 4;
  std::uint64_t hi = s * m >= (s * s + 3) / 4 ? (4 * s * m - s * s) / 4 : 0;
  r.params.emplace_back("window_lo", fmt_int(lo));
  r.params.emplace_back("window_hi", fmt_int(hi));
  r.preconditions_met = inside && m >= 1 && h >= 1 && lo <= hi;
  if (!r.preconditions_met) return r;

  std::uint64_t width = hi - lo + 1;
  Count pairs = binomial(s - 1, h);
  pairs *= pairs;
  Count bound;
  mpz_cdiv_q_ui(bound.get_mpz_t(), pairs.get_mpz_t(), width);

  auto table = restricted_table(a, hi);
  std::uint64_t best = lo;
  for (std::uint64_t j = lo + 1; j <= hi; ++j)
    if (table[j] > table[best]) best = j;  // strict: smallest maximizer wins
  double beta = static_cast<double>(s) / static_cast<double>(m);
  double context = 2.0 * std::numbers::ln2 * std::sqrt(beta * static_cast<double>(best) / (1.0 - beta / 4.0));
  r.params.emplace_back("argmax", fmt_int(best));
  r.params.emplace_back("asymptotic_rhs_log", fmt_real(context));
  finish_exact(r, table[best], bound);
  return r;
}

namespace {

PartSet top_interval(double beta, std::uint64_t n) {
  std::uint64_t lo = floor_mul(1.0 - beta, static_cast<long double>(n)) + 1;
  return PartSet::range(lo, n);
}

double interval_rhs_exp(double beta, std::uint64_t m) {
  return 2.0 * std::numbers::ln2 * std::sqrt(beta * static_cast<double>(m) / (1.0 - beta));
}

}  // namespace

BoundReport audit_interval_upper(double beta, std::uint64_t n, std::uint64_t m) {
  require(beta > 0.0 && beta < 1.0, "audit_interval_upper: beta must lie in (0,1)");
  PartSet iv = top_interval(beta, n);
  auto r = make(LemmaId::interval_upper, Relation::leq,
                {{"beta", fmt_real(beta)}, {"n", fmt_int(n)}, {"m", fmt_int(m)}, {"interval", iv.to_string()}});
  r.preconditions_met = n >= 1;
  if (!r.preconditions_met) return r;
  Count lhs = count_restricted(iv, m);
  finish_log(r, LogMag::of(lhs), exp_mag(interval_rhs_exp(beta, m)));
  r.lhs_exact = std::move(lhs);
  return r;
}

BoundReport audit_interval_upper_range(double beta, std::uint64_t n, std::uint64_t m_max) {
  require(beta > 0.0 && beta < 1.0, "audit_interval_upper_range: beta must lie in (0,1)");
  PartSet iv = top_interval(beta, n);
  auto r = make(LemmaId::interval_upper, Relation::leq,
                {{"beta", fmt_real(beta)}, {"n", fmt_int(n)}, {"m_max", fmt_int(m_max)}, {"interval", iv.to_string()}});
  r.preconditions_met = n >= 1;
  if (!r.preconditions_met) return r;
  auto table = restricted_table(iv, m_max);
  std::uint64_t worst = 0;
  double worst_slack = kInf;
  bool all_pass = true;
  for (std::uint64_t m = 0; m <= m_max; ++m) {
    double sl = log_slack(LogMag::of(table[m]), exp_mag(interval_rhs_exp(beta, m)), Relation::leq);
    if (sl < -kGuardBand) all_pass = false;
    if (sl < worst_slack) {
      worst_slack = sl;
      worst = m;
    }
  }
  r.params.emplace_back("worst_m", fmt_int(worst));
  finish_log(r, LogMag::of(table[worst]), exp_mag(interval_rhs_exp(beta, worst)));
  r.lhs_exact = table[worst];
  r.pass = r.pass && all_pass;
  return r;
}

namespace {

// j^j with 0^0 = 1
Count self_power(std::uint64_t j) {
  Count c;
  mpz_ui_pow_ui(c.get_mpz_t(), j, j);
  return c;
}

double entropy_rhs_log(std::uint64_t n, std::uint64_t k) {
  return binary_entropy(static_cast<double>(k) / static_cast<double>(n)) * static_cast<double>(n) *
         std::numbers::ln2;
}

}  // namespace

BoundReport entropy_binomial_bound(std::uint64_t n, std::uint64_t k) {
  auto r = make(LemmaId::entropy_binomial, Relation::leq, {{"n", fmt_int(n)}, {"k", fmt_int(k)}});
  r.preconditions_met = n >= 1 && k <= n;
  if (!r.preconditions_met) return r;
  // C(n,k) <= (n/k)^k (n/(n-k))^(n-k)  <=>  C(n,k) k^k (n-k)^(n-k) <= n^n
  Count lhs = binomial(n, k);
  bool holds = lhs * self_power(k) * self_power(n - k) <= self_power(n);
  r.lhs = LogMag::of(lhs);
  r.rhs = exp_mag(entropy_rhs_log(n, k));
  r.slack = log_slack(r.lhs, r.rhs, Relation::leq);
  r.pass = holds;
  r.lhs_exact = std::move(lhs);
  return r;
}

BoundReport entropy_binomial_row(std::uint64_t n) {
  auto r = make(LemmaId::entropy_binomial, Relation::leq, {{"n", fmt_int(n)}, {"k", "0.." + fmt_int(n)}});
  r.preconditions_met = n >= 1;
  if (!r.preconditions_met) return r;
  std::vector<Count> powers(n + 1);
  for (std::uint64_t j = 0; j <= n; ++j) powers[j] = self_power(j);
  bool all = true;
  std::uint64_t worst = 0;
  double worst_slack = kInf;
  Count c = 1;  // C(n, k), updated along the row
  for (std::uint64_t k = 0; k <= n; ++k) {
    if (k > 0) {
      c *= n - k + 1;
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
    }
    if (c * powers[k] * powers[n - k] > powers[n]) all = false;
    double sl = log_slack(LogMag::of(c), exp_mag(entropy_rhs_log(n, k)), Relation::leq);
    if (sl < worst_slack) {
      worst_slack = sl;
      worst = k;
    }
  }
  r.params.emplace_back("worst_k", fmt_int(worst));
  Count lhs = binomial(n, worst);
  r.lhs = LogMag::of(lhs);
  r.rhs = exp_mag(entropy_rhs_log(n, worst));
  r.slack = worst_slack;
  r.pass = all;
  r.lhs_exact = std::move(lhs);
  return r;
}

std::vector<double> default_fbeta_grid(double beta) {
  require(beta > 0.0 && beta < 1.0, "default_fbeta_grid: beta must lie in (0,1)");
  double a = beta * (1.0 - beta);
  std::vector<double> g(5000);
  for (std::size_t j = 0; j < g.size(); ++j) g[j] = a * static_cast<double>(j + 1) / 1000.0;
  return g;
}

BoundReport audit_fbeta_peak(double beta, std::span<const double> grid) {
  require(beta > 0.0 && beta < 1.0, "audit_fbeta_peak: beta must lie in (0,1)");
  double a = beta * (1.0 - beta);
  double peak = 2.0 * std::sqrt(beta / (1.0 - beta));
  auto r = make(LemmaId::fbeta_peak, Relation::leq,
                {{"beta", fmt_real(beta)}, {"grid_size", fmt_int(grid.size())}, {"peak_gamma", fmt_real(a)}});
  r.preconditions_met = grid.size() >= 2 && std::is_sorted(grid.begin(), grid.end()) && grid.front() > 0.0;
  if (!r.preconditions_met) return r;

  std::size_t best = 0;
  double best_value = -kInf;
  bool signs_ok = true;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    double v = f_beta(beta, grid[j]);
    if (v > best_value) {
      best_value = v;
      best = j;
    }
    double g = g_a(a, grid[j]);
    double rel = std::fabs(grid[j] - a) / a;
    if (rel < 1e-12) continue;  // g_a(a) = 0
    if (grid[j] < a ? !(g > 0.0) : !(g < 0.0)) signs_ok = false;
  }
  double step = 0.0;
  if (best > 0) step = std::max(step, grid[best] - grid[best - 1]);
  if (best + 1 < grid.size()) step = std::max(step, grid[best + 1] - grid[best]);
  bool argmax_ok = std::fabs(grid[best] - a) <= step * (1.0 + 1e-12);
  r.params.emplace_back("argmax_gamma", fmt_real(grid[best]));
  r.params.emplace_back("max_value", fmt_real(best_value));
  r.params.emplace_back("argmax_within_step", fmt_bool(argmax_ok));
  r.params.emplace_back("g_sign_pattern", fmt_bool(signs_ok));
  // The peak bound carries an absolute 1e-9 allowance on the raw values.
  r.lhs = LogMag::of(best_value);
  r.rhs = LogMag::of(peak + 1e-9);
  r.slack = log_slack(r.lhs, r.rhs, Relation::leq);
  r.pass = argmax_ok && signs_ok && best_value <= peak + 1e-9;
  return r;
}

}  // namespace partfn
