#include "partfn/part_set.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace partfn {

namespace {

void validate(const Interval& iv) {
  if (iv.lo < 1) throw std::invalid_argument("PartSet: elements must be positive");
  if (iv.lo > iv.hi) throw std::invalid_argument("PartSet: interval with lo > hi");
  if (iv.hi > PartSet::kMaxElement) throw std::invalid_argument("PartSet: element too large");
}

std::uint64_t parse_number(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("PartSet: malformed number '" + std::string(s) + "'");
  return v;
}

}  // namespace

PartSet::PartSet(std::initializer_list<Interval> intervals)
    : PartSet(std::vector<Interval>(intervals)) {}

PartSet::PartSet(std::vector<Interval> intervals) {
  for (const auto& iv : intervals) validate(iv);
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (const auto& iv : intervals) {
    if (!intervals_.empty() && iv.lo <= intervals_.back().hi + 1) {
      intervals_.back().hi = std::max(intervals_.back().hi, iv.hi);
    } else {
      intervals_.push_back(iv);
    }
  }
}

PartSet PartSet::range(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) return {};
  return PartSet({Interval{lo, hi}});
}

PartSet PartSet::of(std::span<const std::uint64_t> elements) {
  std::vector<Interval> ivs;
  ivs.reserve(elements.size());
  for (auto x : elements) ivs.push_back({x, x});
  return PartSet(std::move(ivs));
}

PartSet PartSet::parse(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  std::vector<Interval> ivs;
  if (compact.empty()) return {};
  std::string_view rest = compact;
  while (true) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    if (item.empty()) throw std::invalid_argument("PartSet: empty item in set literal");
    auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      auto x = parse_number(item);
      ivs.push_back({x, x});
    } else {
      ivs.push_back({parse_number(item.substr(0, dash)), parse_number(item.substr(dash + 1))});
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return PartSet(std::move(ivs));
}

std::uint64_t PartSet::size() const {
  std::uint64_t s = 0;
  for (const auto& iv : intervals_) s += iv.size();
  return s;
}

std::optional<std::uint64_t> PartSet::min() const {
  if (intervals_.empty()) return std::nullopt;
  return intervals_.front().lo;
}

std::optional<std::uint64_t> PartSet::max() const {
  if (intervals_.empty()) return std::nullopt;
  return intervals_.back().hi;
}

bool PartSet::contains(std::uint64_t x) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                             [](std::uint64_t v, const Interval& iv) { return v < iv.lo; });
  if (it == intervals_.begin()) return false;
  return x <= std::prev(it)->hi;
}

std::uint64_t PartSet::prefix_count(std::uint64_t n) const {
  std::uint64_t c = 0;
  for (const auto& iv : intervals_) {
    if (iv.lo > n) break;
    c += std::min(iv.hi, n) - iv.lo + 1;
  }
  return c;
}

PartSet PartSet::restrict_to(std::uint64_t lo, std::uint64_t hi) const {
  PartSet out;
  for (const auto& iv : intervals_) {
    std::uint64_t a = std::max(iv.lo, lo), b = std::min(iv.hi, hi);
    if (a <= b) out.intervals_.push_back({a, b});
  }
  return out;
}

PartSet PartSet::unite(const PartSet& other) const {
  std::vector<Interval> all = intervals_;
  all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
  return PartSet(std::move(all));
}

std::vector<std::uint64_t> PartSet::elements_upto(std::uint64_t n) const {
  std::vector<std::uint64_t> out;
  out.reserve(prefix_count(n));
  for (const auto& iv : intervals_) {
    if (iv.lo > n) break;
    for (std::uint64_t x = iv.lo, e = std::min(iv.hi, n); x <= e; ++x) out.push_back(x);
  }
  return out;
}

std::vector<std::uint64_t> PartSet::smallest(std::uint64_t count) const {
  std::vector<std::uint64_t> out;
  for (const auto& iv : intervals_) {
    for (std::uint64_t x = iv.lo; x <= iv.hi && out.size() < count; ++x) out.push_back(x);
    if (out.size() == count) break;
  }
  return out;
}

std::vector<std::uint64_t> PartSet::largest(std::uint64_t count) const {
  std::vector<std::uint64_t> out;
  for (auto it = intervals_.rbegin(); it != intervals_.rend() && out.size() < count; ++it) {
    for (std::uint64_t x = it->hi; out.size() < count; --x) {
      out.push_back(x);
      if (x == it->lo) break;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string PartSet::to_string() const {
  std::string s;
  for (const auto& iv : intervals_) {
    if (!s.empty()) s += ',';
    s += std::to_string(iv.lo);
    if (iv.hi != iv.lo) s += '-' + std::to_string(iv.hi);
  }
  return s;
}

}  // namespace partfn
