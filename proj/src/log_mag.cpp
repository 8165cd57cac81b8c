#include "partfn/count.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace partfn {

LogMag LogMag::of(const Count& c) {
  if (sgn(c) < 0) throw std::invalid_argument("LogMag::of: negative count");
  if (sgn(c) == 0) return zero();
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, c.get_mpz_t());
  return LogMag(std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2);
}

LogMag LogMag::of(double positive_value) {
  if (!(positive_value >= 0.0)) throw std::invalid_argument("LogMag::of: negative or NaN value");
  if (positive_value == 0.0) return zero();
  return LogMag(std::log(positive_value));
}

double LogMag::log() const {
  if (zero_) throw std::logic_error("LogMag::log called on the zero sentinel");
  return log_;
}

LogMag LogMag::operator*(const LogMag& o) const {
  if (zero_ || o.zero_) return zero();
  return LogMag(log_ + o.log_);
}

LogMag LogMag::operator+(const LogMag& o) const {
  if (zero_) return o;
  if (o.zero_) return *this;
  return LogMag(log_add_exp(log_, o.log_));
}

std::partial_ordering operator<=>(const LogMag& a, const LogMag& b) {
  if (a.zero_ || b.zero_) return static_cast<int>(!a.zero_) <=> static_cast<int>(!b.zero_);
  return a.log_ <=> b.log_;
}

std::string LogMag::to_string() const {
  if (zero_) return "zero";
  char buf[64];
  std::snprintf(buf, sizeof buf, "e^%.12g", log_);
  return buf;
}

double log_add_exp(double x, double y) {
  if (x < y) std::swap(x, y);
  double d = y - x;
  // exp(-40) is below double resolution relative to any sum we form here.
  if (d < -40.0) return x;
  return x + std::log1p(std::exp(d));
}

std::string format_count(const Count& c, std::size_t max_digits) {
  if (mpz_sizeinbase(c.get_mpz_t(), 10) <= max_digits) {
    std::string s = c.get_str(10);
    if (s.size() <= max_digits) return s;
  }
  return LogMag::of(c).to_string();
}

Count factorial(std::uint64_t k) {
  Count r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Count binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  Count r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace partfn
