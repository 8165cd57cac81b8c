#ifndef PARTFN_COUNT_HPP
#define PARTFN_COUNT_HPP

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace partfn {

// Exact nonnegative partition counts. Every count in the library lives in
// this type; nothing is ever rounded on the exact path.
using Count = mpz_class;

/// Natural-log magnitude of a nonnegative quantity, with a distinguished
/// sentinel for exact zero. The sentinel orders below every finite log and
/// never takes part in floating-point arithmetic.
class LogMag {
 public:
  LogMag() = default;  // zero

  static LogMag zero() { return LogMag(); }
  static LogMag from_log(double log_value) { return LogMag(log_value); }
  static LogMag of(const Count& c);
  static LogMag of(double positive_value);

  bool is_zero() const { return zero_; }

  // log of the magnitude; callers must check is_zero() first.
  double log() const;

  // log of the magnitude, or `fallback` for the zero sentinel.
  double log_or(double fallback) const { return zero_ ? fallback : log_; }

  // Product and sum of the underlying magnitudes.
  LogMag operator*(const LogMag& o) const;
  LogMag operator+(const LogMag& o) const;
  LogMag& operator+=(const LogMag& o) { return *this = *this + o; }

  friend bool operator==(const LogMag& a, const LogMag& b) {
    return a.zero_ == b.zero_ && (a.zero_ || a.log_ == b.log_);
  }
  friend std::partial_ordering operator<=>(const LogMag& a, const LogMag& b);

  std::string to_string() const;

 private:
  explicit LogMag(double v) : log_(v), zero_(false) {}

  double log_ = 0.0;
  bool zero_ = true;
};

// log(x + y) given log x and log y.
double log_add_exp(double x, double y);

// Decimal up to max_digits digits, otherwise "e^<log>" with the log value.
std::string format_count(const Count& c, std::size_t max_digits = 10000);

// k! and C(n, k) as exact counts.
Count factorial(std::uint64_t k);
Count binomial(std::uint64_t n, std::uint64_t k);

}  // namespace partfn

#endif  // PARTFN_COUNT_HPP
