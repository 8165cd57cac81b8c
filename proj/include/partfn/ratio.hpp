#ifndef PARTFN_RATIO_HPP
#define PARTFN_RATIO_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "partfn/count.hpp"
#include "partfn/part_set.hpp"

namespace partfn {

/// One point of log p_A(m) / log p(floor(alpha m)).
struct RatioSample {
  std::uint64_t m = 0;
  LogMag log_pa;
  double log_p_alpha_m = 0.0;
  // false when the denominator is the Hardy–Ramanujan estimate rather than
  // the exact value.
  bool exact_denominator = true;
  // -infinity marks p_A(m) = 0.
  double ratio = 0.0;
};

// Denominators above this use the Hardy–Ramanujan estimate.
inline constexpr std::uint64_t kExactPartitionLimit = 50000;

/// Ratio curve of `a` against the unrestricted partition function scaled by
/// alpha in (0, 1]. Every sample must satisfy m <= materialized_cap and
/// floor(alpha m) >= 2 (so the denominator is log p >= log 2); otherwise
/// std::invalid_argument is thrown. Output follows the order of m_samples.
std::vector<RatioSample> ratio_curve(const PartSet& a, double alpha, std::span<const std::uint64_t> m_samples,
                                     std::uint64_t materialized_cap,
                                     std::uint64_t exact_limit = kExactPartitionLimit);

}  // namespace partfn

#endif  // PARTFN_RATIO_HPP
