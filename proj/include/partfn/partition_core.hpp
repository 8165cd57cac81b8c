#ifndef PARTFN_PARTITION_CORE_HPP
#define PARTFN_PARTITION_CORE_HPP

#include <cstdint>
#include <vector>

#include "partfn/count.hpp"
#include "partfn/part_set.hpp"

namespace partfn {

/// p(n), the unrestricted partition function, via Euler's pentagonal
/// recurrence. p(0) = 1.
Count count_partitions(std::uint64_t n);

/// The table p(0), ..., p(n).
std::vector<Count> partition_table(std::uint64_t n);

/// p_A(n): partitions of n with every part in A. p_A(0) = 1 for every A,
/// including the empty set. Only A ∩ [1, n] is consulted.
Count count_restricted(const PartSet& a, std::uint64_t n);

/// The table p_A(0), ..., p_A(n) from one coin-change pass.
std::vector<Count> restricted_table(const PartSet& a, std::uint64_t n);

/// p_k(n): multisets of exactly k positive integers summing to n.
/// count_exact_parts(0, 0) = 1. Uses the recurrence
/// p_k(n) = p_k(n - k) + p_{k-1}(n - 1), independent of the coin-change DP.
Count count_exact_parts(std::uint64_t n, std::uint64_t k);

/// p_[k](n) = p_A(n) with A = [1, k]; k >= 1.
Count count_parts_leq(std::uint64_t k, std::uint64_t n);

/// Log-domain coin-change DP: log p_A(0..n), with the zero sentinel
/// wherever p_A(j) = 0. Usable far beyond the range of machine floats.
std::vector<LogMag> log_restricted_table(const PartSet& a, std::uint64_t n);
LogMag log_count_restricted(const PartSet& a, std::uint64_t n);

/// log of the Hardy–Ramanujan estimate exp(pi sqrt(2n/3)) / (4 n sqrt 3).
double hardy_ramanujan_log(std::uint64_t n);

/// Nonnegative integer solutions of x_1 + ... + x_vars = s, i.e.
/// C(s + vars - 1, vars - 1). vars >= 1.
Count stars_and_bars(std::uint64_t s, std::uint64_t vars);

/// Exhaustive-recursion oracle for p_A(n). Exponential time; intended for
/// tests. Throws std::out_of_range when n exceeds `cap`.
inline constexpr std::uint64_t kDefaultOracleCap = 60;
Count brute_force_count(const PartSet& a, std::uint64_t n,
                        std::uint64_t cap = kDefaultOracleCap);

}  // namespace partfn

#endif  // PARTFN_PARTITION_CORE_HPP
