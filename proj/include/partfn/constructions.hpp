#ifndef PARTFN_CONSTRUCTIONS_HPP
#define PARTFN_CONSTRUCTIONS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "partfn/part_set.hpp"

namespace partfn {

// Set family of lower density alpha: blocks [f(i-1), floor(alpha f(i))] for
// i >= 1 with f(0) = 1, f(1) = n0, f(i+1) = f(i)^2.
struct LowerFamilyParams {
  double alpha = 0.0;
  std::uint64_t n0 = 0;
  std::uint64_t cap = 0;

  // max(ceil(2 / alpha), 16)
  static std::uint64_t default_n0(double alpha);
  void validate() const;
};

// Set family of upper density beta: blocks [floor((1-beta) f(i)) + 1, f(i)]
// for i >= 0 with f(0) = ceil(1/beta), f(i+1) = 2^f(i).
struct UpperFamilyParams {
  double beta = 0.0;
  std::uint64_t cap = 0;

  std::uint64_t n0() const;
  void validate() const;
};

struct DensitySample {
  std::uint64_t n = 0;
  std::uint64_t prefix_count = 0;
  double density = 0.0;
};
using DensityProfile = std::vector<DensitySample>;

struct GapRegion {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  bool empty() const { return lo > hi; }
};

PartSet build_lower_set(const LowerFamilyParams& p);
PartSet build_upper_set(const UpperFamilyParams& p);

// The generating sequence f(0), f(1), ... truncated to values <= cap.
std::vector<std::uint64_t> lower_family_checkpoints(const LowerFamilyParams& p);
std::vector<std::uint64_t> upper_family_checkpoints(const UpperFamilyParams& p);

// Blocks as generated, before merging and clipped to [1, cap].
std::vector<Interval> lower_family_blocks(const LowerFamilyParams& p);
std::vector<Interval> upper_family_blocks(const UpperFamilyParams& p);

// Exact prefix counts of `a` at each checkpoint. `materialized_cap` is the
// bound up to which `a` is known to be complete; checkpoints beyond it (or
// equal to 0) are rejected.
DensityProfile density_profile(const PartSet& a, std::span<const std::uint64_t> checkpoints,
                               std::uint64_t materialized_cap);

// [ceil(16 alpha n^2), floor(alpha n^4 / 16)]: the m-range of the liminf
// lower-bound estimate for A = {1} ∪ [n, alpha n^2].
GapRegion gap_region(double alpha, std::uint64_t n);
// The same with n = f(i) of the lower family.
GapRegion gap_region(const LowerFamilyParams& p, std::size_t i);

// floor(x * y) for x >= 0 real and integer y, snapping products that sit
// within rounding distance of an integer.
std::uint64_t floor_mul(double x, long double y);
std::uint64_t ceil_mul(double x, long double y);

}  // namespace partfn

#endif  // PARTFN_CONSTRUCTIONS_HPP
