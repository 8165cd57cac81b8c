#ifndef PARTFN_SCALAR_FUNCTIONS_HPP
#define PARTFN_SCALAR_FUNCTIONS_HPP

#include <vector>

namespace partfn {

// H_2(x) = -x log2 x - (1-x) log2(1-x), with H_2(0) = H_2(1) = 0.
// Throws std::domain_error outside [0, 1].
double binary_entropy(double x);

// f_beta(gamma) = H_2(gamma / (gamma + beta(1-beta))) (gamma/(1-beta) + beta) / sqrt(gamma)
// for beta in (0,1), gamma > 0. Peaks at gamma = beta(1-beta) with value
// 2 sqrt(beta / (1-beta)).
double f_beta(double beta, double gamma);

// g_a(x) = a log2(a/(a+x)) - x log2(x/(a+x)) for a, x > 0. Numerator of
// f_beta' up to a positive factor when a = beta(1-beta).
double g_a(double a, double x);

// `count` evenly spaced points lo, lo+h, ..., hi.
std::vector<double> uniform_grid(double lo, double hi, std::size_t count);

}  // namespace partfn

#endif  // PARTFN_SCALAR_FUNCTIONS_HPP
