#ifndef PARTFN_PART_SET_HPP
#define PARTFN_PART_SET_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace partfn {

/// Inclusive integer interval [lo, hi].
struct Interval {
  std::uint64_t lo = 1;
  std::uint64_t hi = 1;

  std::uint64_t size() const { return hi - lo + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A finite set of positive integers stored as sorted, disjoint,
/// non-adjacent intervals. Construction normalizes arbitrary input, so every
/// PartSet satisfies the canonical-form invariant.
///
/// Elements are bounded by kMaxElement so that sizes and prefix counts fit in
/// 64 bits.
class PartSet {
 public:
  static constexpr std::uint64_t kMaxElement = std::uint64_t{1} << 62;

  PartSet() = default;
  PartSet(std::initializer_list<Interval> intervals);
  explicit PartSet(std::vector<Interval> intervals);

  static PartSet range(std::uint64_t lo, std::uint64_t hi);
  static PartSet of(std::span<const std::uint64_t> elements);

  // Parses "x" and "a-b" items separated by commas; whitespace ignored.
  // The empty string (or only whitespace) is the empty set.
  static PartSet parse(std::string_view text);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  std::uint64_t size() const;
  std::optional<std::uint64_t> min() const;
  std::optional<std::uint64_t> max() const;

  bool contains(std::uint64_t x) const;
  // |A ∩ [1, n]|
  std::uint64_t prefix_count(std::uint64_t n) const;

  // A ∩ [lo, hi]
  PartSet restrict_to(std::uint64_t lo, std::uint64_t hi) const;
  PartSet unite(const PartSet& other) const;

  // Elements of A ∩ [1, n] in ascending order.
  std::vector<std::uint64_t> elements_upto(std::uint64_t n) const;
  // The `count` smallest / largest elements.
  std::vector<std::uint64_t> smallest(std::uint64_t count) const;
  std::vector<std::uint64_t> largest(std::uint64_t count) const;

  std::string to_string() const;

  friend bool operator==(const PartSet&, const PartSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

}  // namespace partfn

#endif  // PARTFN_PART_SET_HPP
