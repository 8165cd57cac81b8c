#include "partfn/scalar_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace partfn {

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("binary_entropy: x must lie in [0,1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double f_beta(double beta, double gamma) {
  if (!(beta > 0.0 && beta < 1.0)) throw std::domain_error("f_beta: beta must lie in (0,1)");
  if (!(gamma > 0.0)) throw std::domain_error("f_beta: gamma must be positive");
  double a = beta * (1.0 - beta);
  return binary_entropy(gamma / (gamma + a)) * (gamma / (1.0 - beta) + beta) / std::sqrt(gamma);
}

double g_a(double a, double x) {
  if (!(a > 0.0) || !(x > 0.0)) throw std::domain_error("g_a: a and x must be positive");
  return a * std::log2(a / (a + x)) - x * std::log2(x / (a + x));
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t count) {
  if (count < 2 || !(hi > lo)) throw std::invalid_argument("uniform_grid: need count >= 2 and hi > lo");
  std::vector<double> g(count);
  double h = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) g[i] = lo + h * static_cast<double>(i);
  g.back() = hi;
  return g;
}

}  // namespace partfn
