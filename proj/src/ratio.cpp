#include "partfn/ratio.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "partfn/constructions.hpp"
#include "partfn/partition_core.hpp"

namespace partfn {

std::vector<RatioSample> ratio_curve(const PartSet& a, double alpha, std::span<const std::uint64_t> m_samples,
                                     std::uint64_t materialized_cap, std::uint64_t exact_limit) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("ratio_curve: alpha must lie in (0,1]");
  std::uint64_t max_m = 0, max_exact = 0;
  for (auto m : m_samples) {
    if (m > materialized_cap)
      throw std::invalid_argument("ratio_curve: sample m=" + std::to_string(m) + " beyond materialized cap");
    std::uint64_t am = floor_mul(alpha, static_cast<long double>(m));
    if (am < 2)
      throw std::invalid_argument("ratio_curve: p(floor(alpha m)) < 2 at m=" + std::to_string(m));
    max_m = std::max(max_m, m);
    if (am <= exact_limit) max_exact = std::max(max_exact, am);
  }
  auto numer = log_restricted_table(a, max_m);
  auto p = partition_table(max_exact);

  std::vector<RatioSample> out;
  out.reserve(m_samples.size());
  for (auto m : m_samples) {
    RatioSample s;
    s.m = m;
    s.log_pa = numer[m];
    std::uint64_t am = floor_mul(alpha, static_cast<long double>(m));
    s.exact_denominator = am <= exact_limit;
    s.log_p_alpha_m = s.exact_denominator ? LogMag::of(p[am]).log() : hardy_ramanujan_log(am);
    s.ratio = s.log_pa.is_zero() ? -std::numeric_limits<double>::infinity() : s.log_pa.log() / s.log_p_alpha_m;
    out.push_back(s);
  }
  return out;
}

}  // namespace partfn
