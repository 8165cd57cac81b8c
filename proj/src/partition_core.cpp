#include "partfn/partition_core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace partfn {

std::vector<Count> partition_table(std::uint64_t n) {
  std::vector<Count> p(n + 1);
  p[0] = 1;
  Count acc;
  for (std::uint64_t i = 1; i <= n; ++i) {
    acc = 0;
    for (std::uint64_t k = 1;; ++k) {
      std::uint64_t g1 = k * (3 * k - 1) / 2;
      if (g1 > i) break;
      std::uint64_t g2 = g1 + k;  // k(3k+1)/2
      if (k & 1) {
        acc += p[i - g1];
        if (g2 <= i) acc += p[i - g2];
      } else {
        acc -= p[i - g1];
        if (g2 <= i) acc -= p[i - g2];
      }
    }
    p[i] = acc;
  }
  return p;
}

Count count_partitions(std::uint64_t n) { return partition_table(n).back(); }

std::vector<Count> restricted_table(const PartSet& a, std::uint64_t n) {
  std::vector<Count> dp(n + 1);
  dp[0] = 1;
  const PartSet parts = a.restrict_to(1, n);
  for (const auto& iv : parts.intervals()) {
    for (std::uint64_t part = iv.lo; part <= iv.hi; ++part) {
      for (std::uint64_t j = part; j <= n; ++j) {
        if (sgn(dp[j - part]) != 0) mpz_add(dp[j].get_mpz_t(), dp[j].get_mpz_t(), dp[j - part].get_mpz_t());
      }
    }
  }
  return dp;
}

Count count_restricted(const PartSet& a, std::uint64_t n) {
  return std::move(restricted_table(a, n).back());
}

Count count_exact_parts(std::uint64_t n, std::uint64_t k) {
  if (k == 0) return n == 0 ? 1 : 0;
  if (k > n) return 0;
  // prev[j] = p_{i-1}(j), cur[j] = p_i(j)
  std::vector<Count> prev(n + 1), cur(n + 1);
  prev[0] = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    for (std::uint64_t j = 0; j <= n; ++j) {
      cur[j] = 0;
      if (j >= i) cur[j] += cur[j - i];
      if (j >= 1) cur[j] += prev[j - 1];
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

Count count_parts_leq(std::uint64_t k, std::uint64_t n) {
  if (k < 1) throw std::invalid_argument("count_parts_leq: k must be >= 1");
  return count_restricted(PartSet::range(1, k), n);
}

std::vector<LogMag> log_restricted_table(const PartSet& a, std::uint64_t n) {
  std::vector<double> lv(n + 1, 0.0);
  std::vector<unsigned char> nonzero(n + 1, 0);
  nonzero[0] = 1;
  const PartSet parts = a.restrict_to(1, n);
  for (const auto& iv : parts.intervals()) {
    for (std::uint64_t part = iv.lo; part <= iv.hi; ++part) {
      for (std::uint64_t j = part; j <= n; ++j) {
        std::uint64_t src = j - part;
        if (!nonzero[src]) continue;
        if (nonzero[j]) {
          lv[j] = log_add_exp(lv[j], lv[src]);
        } else {
          lv[j] = lv[src];
          nonzero[j] = 1;
        }
      }
    }
  }
  std::vector<LogMag> out(n + 1);
  for (std::uint64_t j = 0; j <= n; ++j)
    out[j] = nonzero[j] ? LogMag::from_log(lv[j]) : LogMag::zero();
  return out;
}

LogMag log_count_restricted(const PartSet& a, std::uint64_t n) {
  return log_restricted_table(a, n).back();
}

double hardy_ramanujan_log(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("hardy_ramanujan_log: n must be >= 1");
  double x = static_cast<double>(n);
  return std::numbers::pi * std::sqrt(2.0 * x / 3.0) - std::log(4.0 * x * std::numbers::sqrt3);
}

Count stars_and_bars(std::uint64_t s, std::uint64_t vars) {
  if (vars < 1) throw std::invalid_argument("stars_and_bars: vars must be >= 1");
  return binomial(s + vars - 1, vars - 1);
}

namespace {

// Enumerates multiplicities of parts[i], parts[i+1], ... (descending) and
// counts the assignments that hit the remainder exactly.
std::uint64_t enumerate(const std::vector<std::uint64_t>& parts, std::size_t i, std::uint64_t remainder) {
  if (remainder == 0) return 1;
  if (i == parts.size()) return 0;
  std::uint64_t total = 0;
  for (std::uint64_t used = 0; used <= remainder; used += parts[i])
    total += enumerate(parts, i + 1, remainder - used);
  return total;
}

}  // namespace

Count brute_force_count(const PartSet& a, std::uint64_t n, std::uint64_t cap) {
  if (n > cap)
    throw std::out_of_range("brute_force_count: n=" + std::to_string(n) + " exceeds oracle cap " +
                            std::to_string(cap));
  auto parts = a.elements_upto(n);
  std::vector<std::uint64_t> desc(parts.rbegin(), parts.rend());
  Count c;
  mpz_set_ui(c.get_mpz_t(), enumerate(desc, 0, n));
  return c;
}

}  // namespace partfn
