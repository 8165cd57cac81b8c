#ifndef PARTFN_BOUNDS_AUDIT_HPP
#define PARTFN_BOUNDS_AUDIT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partfn/count.hpp"
#include "partfn/part_set.hpp"

namespace partfn {

enum class LemmaId {
  trivial_bound,
  pk_sandwich,
  shift_identity,
  first_is_best,
  stars_bars_injection,
  liminf_lower_main,
  szekeres,
  shift_bijection,
  dixmier_nicolas_upper,
  liminf_upper_main,
  pigeonhole,
  interval_upper,
  entropy_binomial,
  fbeta_peak,
};

std::string_view lemma_name(LemmaId id);
std::optional<LemmaId> lemma_from_name(std::string_view name);
std::span<const LemmaId> all_lemmas();

enum class Relation { leq, geq, eq };

// Parameters in canonical (insertion) order, values already formatted.
using ParamList = std::vector<std::pair<std::string, std::string>>;

/// Outcome of one audit. `lhs`/`rhs` are always present in log form; exact
/// values are attached when the comparison was decided on integers.
/// slack is measured in natural-log units and is nonnegative exactly when
/// the inequality holds (rhs - lhs for <=, lhs - rhs for >=).
struct BoundReport {
  LemmaId lemma = LemmaId::trivial_bound;
  Relation relation = Relation::leq;
  ParamList params;
  LogMag lhs;
  LogMag rhs;
  std::optional<Count> lhs_exact;
  std::optional<Count> rhs_exact;
  double slack = 0.0;
  bool preconditions_met = false;
  bool pass = false;
  // Passed only inside the 1e-9 guard band of a real-valued comparison.
  bool marginal = false;
  // RHS is vacuous (e.g. nonpositive exponent); pass carries no information.
  bool trivial = false;

  std::string param(std::string_view name) const;
};

/// Sufficient-condition floors for the asymptotic statements. The source
/// results only assert existence of these thresholds; audits compare n
/// against the configured floors and report the proof-side conditions.
struct Thresholds {
  std::uint64_t n1 = 1;  // liminf lower-bound estimate
  std::uint64_t n2 = 1;  // bounded-part estimate
  std::uint64_t n3 = 1;  // large-part estimate
  double alpha0 = 1.0;
  double lambda0 = 1.0;
  // Coefficient C of the loglog term in the liminf upper-bound check.
  // Reported only; never part of the verdict.
  double loglog_coeff = 4.0;

  void validate() const;
};

// Absolute tolerance, in log units, granted to the RHS of real-valued
// comparisons.
inline constexpr double kGuardBand = 1e-9;

// Slack between two magnitudes for the given relation (see BoundReport).
double log_slack(const LogMag& lhs, const LogMag& rhs, Relation rel);

// p_A(n) <= (n+1)^|A|
BoundReport audit_trivial_bound(const PartSet& a, std::uint64_t n);

// C(n-1, k-1) <= k! p_k(n) <= C(n + C(k,2) - 1, k-1)
BoundReport audit_pk_sandwich(std::uint64_t n, std::uint64_t k);

// p_[k](n) = p_k(n + k)
BoundReport audit_shift_identity(std::uint64_t n, std::uint64_t k);

// p_A(n) <= p_[|A|](n)
BoundReport audit_first_is_best(const PartSet& a, std::uint64_t n);

// p_{{1} ∪ [n, n+K]}(m) >= C(s + K, K) when s (n + K) <= m.
BoundReport stars_bars_injection_bound(std::uint64_t n, std::uint64_t big_k, std::uint64_t s,
                                       std::uint64_t m);

// Injection parameters (K, s) used for A = {1} ∪ [n, alpha n^2] at m, chosen
// by which of the two m-ranges m falls in. Empty when neither applies.
struct InjectionParams {
  std::uint64_t big_k = 0;
  std::uint64_t s = 0;
  int range_case = 0;
};
std::optional<InjectionParams> liminf_injection_params(double alpha, std::uint64_t n, std::uint64_t m);

// log p_A(m) >= (2 log(1/alpha) - 8) sqrt(alpha m) for A = {1} ∪ [n, alpha n^2]
// and m in the gap region.
BoundReport audit_liminf_lower_main(double alpha, std::uint64_t n, std::uint64_t m,
                                    const Thresholds& t = {});

// (2g log(1/g) + g/2) sqrt n <= log p_[floor(g sqrt n)](n) <= (2g log(1/g) + 4g) sqrt n
BoundReport audit_szekeres(double gamma, std::uint64_t n, const Thresholds& t = {});

// p_[L, n](n) >= p_k(n - kL)
BoundReport shift_bijection_bound(std::uint64_t lower, std::uint64_t k, std::uint64_t n);

// log p_[ceil(lambda sqrt n), n](n) <= ((2 log lambda + 4) / lambda) sqrt n
BoundReport audit_dixmier_nicolas_upper(double lambda, std::uint64_t n, const Thresholds& t = {});

// Split skeleton p_A(m) <= (m+1) max_k p_{A1}(k) max_k p_{A2}(k) with
// m = floor(alpha n^2), A1 = A ∩ [n], A2 = A ∩ [n+1, m], plus the exact
// convolution identity behind it.
BoundReport audit_liminf_upper_main(const PartSet& a, double alpha, std::uint64_t n,
                                    const Thresholds& t = {});

// Window maximum of p_A over [s^2/4, s m - s^2/4] (s = |A|) against
// ceil(C(s-1, floor(s/2))^2 / window size).
BoundReport audit_pigeonhole(const PartSet& a, std::uint64_t m);

// p_[floor((1-beta) n) + 1, n](m) <= exp(2 log 2 sqrt(beta m / (1 - beta)))
BoundReport audit_interval_upper(double beta, std::uint64_t n, std::uint64_t m);
// The same for every m in [0, m_max] from a single table; reports the
// smallest-slack m and passes iff every m passes.
BoundReport audit_interval_upper_range(double beta, std::uint64_t n, std::uint64_t m_max);

// C(n, k) <= 2^(H_2(k/n) n), decided on integers.
BoundReport entropy_binomial_bound(std::uint64_t n, std::uint64_t k);
// All k in [0, n]; reports the smallest-slack k.
BoundReport entropy_binomial_row(std::uint64_t n);

// Grid facts about f_beta and g_a with a = beta(1-beta).
BoundReport audit_fbeta_peak(double beta, std::span<const double> grid);
// gamma = a j / 1000, j = 1..5000.
std::vector<double> default_fbeta_grid(double beta);

}  // namespace partfn

#endif  // PARTFN_BOUNDS_AUDIT_HPP
