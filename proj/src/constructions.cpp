#include "partfn/constructions.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <stdexcept>
#include <string>

namespace partfn {

namespace {

constexpr long double kMax = static_cast<long double>(PartSet::kMaxElement);

long double snap_tolerance(long double y) {
  return std::min<long double>(0.25L, 8.0L * DBL_EPSILON * std::fabs(y));
}

// f(0..) of the lower family, stopping at the first value beyond `limit`
// (that value is included so callers can form the last block's end).
std::vector<unsigned __int128> lower_sequence(const LowerFamilyParams& p, std::uint64_t limit) {
  std::vector<unsigned __int128> f{1, p.n0};
  while (f.back() <= limit) {
    unsigned __int128 last = f.back();
    f.push_back(last * last);  // last <= 2^62, so the square fits
  }
  return f;
}

}  // namespace

std::uint64_t floor_mul(double x, long double y) {
  long double v = static_cast<long double>(x) * y;
  long double r = std::roundl(v);
  if (std::fabs(v - r) <= snap_tolerance(v)) v = r;
  v = std::floor(v);
  if (v < 0) return 0;
  if (v > kMax) return PartSet::kMaxElement + 1;
  return static_cast<std::uint64_t>(v);
}

std::uint64_t ceil_mul(double x, long double y) {
  long double v = static_cast<long double>(x) * y;
  long double r = std::roundl(v);
  if (std::fabs(v - r) <= snap_tolerance(v)) v = r;
  v = std::ceil(v);
  if (v < 0) return 0;
  if (v > kMax) return PartSet::kMaxElement + 1;
  return static_cast<std::uint64_t>(v);
}

std::uint64_t LowerFamilyParams::default_n0(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
  return std::max<std::uint64_t>(ceil_mul(2.0, 1.0L / alpha), 16);
}

void LowerFamilyParams::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
  if (n0 == 0 || n0 > PartSet::kMaxElement) throw std::invalid_argument("n0 out of range");
  if (!(static_cast<long double>(n0) * alpha > 1.0L))
    throw std::invalid_argument("n0 must exceed 1/alpha");
  if (cap == 0 || cap > PartSet::kMaxElement) throw std::invalid_argument("cap out of range");
}

std::uint64_t UpperFamilyParams::n0() const { return ceil_mul(1.0, 1.0L / beta); }

void UpperFamilyParams::validate() const {
  if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("beta must lie in (0,1)");
  if (cap == 0 || cap > PartSet::kMaxElement) throw std::invalid_argument("cap out of range");
}

std::vector<Interval> lower_family_blocks(const LowerFamilyParams& p) {
  p.validate();
  auto f = lower_sequence(p, p.cap);
  std::vector<Interval> blocks;
  for (std::size_t i = 1; i < f.size() && f[i - 1] <= p.cap; ++i) {
    std::uint64_t lo = static_cast<std::uint64_t>(f[i - 1]);
    std::uint64_t hi = std::min(floor_mul(p.alpha, static_cast<long double>(f[i])), p.cap);
    if (lo <= hi) blocks.push_back({lo, hi});
  }
  return blocks;
}

PartSet build_lower_set(const LowerFamilyParams& p) { return PartSet(lower_family_blocks(p)); }

std::vector<std::uint64_t> lower_family_checkpoints(const LowerFamilyParams& p) {
  p.validate();
  std::vector<std::uint64_t> out;
  for (auto v : lower_sequence(p, p.cap))
    if (v <= p.cap) out.push_back(static_cast<std::uint64_t>(v));
  return out;
}

std::vector<std::uint64_t> upper_family_checkpoints(const UpperFamilyParams& p) {
  p.validate();
  std::vector<std::uint64_t> out;
  std::uint64_t f = p.n0();
  while (f <= p.cap) {
    out.push_back(f);
    if (f >= 63) break;  // 2^f exceeds any admissible cap
    f = std::uint64_t{1} << f;
  }
  return out;
}

std::vector<Interval> upper_family_blocks(const UpperFamilyParams& p) {
  p.validate();
  std::vector<Interval> blocks;
  // f stays exact in long double while f <= 2^62; once f exceeds any cap the
  // next block start does too, so huge f are never formed.
  long double f = static_cast<long double>(p.n0());
  while (true) {
    std::uint64_t start = floor_mul(1.0 - p.beta, f) + 1;
    if (start > p.cap) break;
    std::uint64_t end = f > static_cast<long double>(p.cap) ? p.cap : static_cast<std::uint64_t>(f);
    blocks.push_back({start, end});
    if (f >= 16000.0L) break;  // 2^f overflows long double; its block start exceeds cap
    f = std::exp2(f);
  }
  return blocks;
}

PartSet build_upper_set(const UpperFamilyParams& p) { return PartSet(upper_family_blocks(p)); }

DensityProfile density_profile(const PartSet& a, std::span<const std::uint64_t> checkpoints,
                               std::uint64_t materialized_cap) {
  DensityProfile out;
  out.reserve(checkpoints.size());
  for (auto n : checkpoints) {
    if (n == 0) throw std::invalid_argument("density_profile: checkpoints must be positive");
    if (n > materialized_cap)
      throw std::out_of_range("density_profile: checkpoint " + std::to_string(n) +
                              " beyond materialized range " + std::to_string(materialized_cap));
    auto c = a.prefix_count(n);
    out.push_back({n, c, static_cast<double>(c) / static_cast<double>(n)});
  }
  return out;
}

GapRegion gap_region(double alpha, std::uint64_t n) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
  long double n2 = static_cast<long double>(n) * n;
  long double n4 = n2 * n2;
  if (16.0L * alpha * n2 > kMax || alpha * n4 / 16.0L > 1e30L)
    throw std::out_of_range("gap_region: endpoints beyond materialization range");
  std::uint64_t lo = ceil_mul(16.0 * alpha, n2);
  std::uint64_t hi = floor_mul(alpha / 16.0, n4);
  if (hi > PartSet::kMaxElement) hi = PartSet::kMaxElement;
  return {lo, hi};
}

GapRegion gap_region(const LowerFamilyParams& p, std::size_t i) {
  p.validate();
  std::vector<unsigned __int128> f{1, p.n0};
  while (f.size() <= i) {
    if (f.back() > PartSet::kMaxElement) throw std::out_of_range("gap_region: f(i) too large");
    f.push_back(f.back() * f.back());
  }
  if (f[i] > (unsigned __int128)(1) << 31) throw std::out_of_range("gap_region: f(i) too large");
  return gap_region(p.alpha, static_cast<std::uint64_t>(f[i]));
}

}  // namespace partfn
