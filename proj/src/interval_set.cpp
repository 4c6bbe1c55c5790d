#include "sumint/interval_set.hpp"

#include <algorithm>

#include "sumint/error.hpp"

namespace sumint {

IntervalSet IntervalSet::from_intervals(std::vector<Interval> intervals) {
  const Rational zero(0), one(1);
  std::erase_if(intervals, [](const Interval& iv) { return iv.hi <= iv.lo; });
  for (const Interval& iv : intervals)
    if (iv.lo < zero || iv.hi > one)
      fail(ErrorCode::InvalidArgument, "interval [" + iv.lo.str() + ", " + iv.hi.str() + ") escapes [0, 1)");
  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

  IntervalSet out;
  for (Interval& iv : intervals) {
    if (!out.intervals_.empty() && iv.lo <= out.intervals_.back().hi) {
      if (iv.hi > out.intervals_.back().hi) out.intervals_.back().hi = std::move(iv.hi);
    } else {
      out.intervals_.push_back(std::move(iv));
    }
  }
  return out;
}

IntervalSet IntervalSet::full() { return from_intervals({{Rational(0), Rational(1)}}); }

bool IntervalSet::contains(const Rational& alpha) const {
  // First interval whose hi exceeds alpha is the only candidate.
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), alpha,
                             [](const Rational& a, const Interval& iv) { return a < iv.hi; });
  return it != intervals_.end() && it->lo <= alpha;
}

Rational IntervalSet::measure() const {
  Rational total;
  for (const Interval& iv : intervals_) total += iv.hi - iv.lo;
  return total;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> all = intervals_;
  all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
  return from_intervals(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  const auto& a = intervals_;
  const auto& b = other.intervals_;
  while (i < a.size() && j < b.size()) {
    const Rational& lo = std::max(a[i].lo, b[j].lo);
    const Rational& hi = std::min(a[i].hi, b[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (a[i].hi < b[j].hi)
      ++i;
    else
      ++j;
  }
  return from_intervals(std::move(out));
}

IntervalSet IntervalSet::complement() const {
  std::vector<Interval> out;
  Rational cursor(0);
  for (const Interval& iv : intervals_) {
    if (cursor < iv.lo) out.push_back({cursor, iv.lo});
    cursor = iv.hi;
  }
  if (cursor < Rational(1)) out.push_back({cursor, Rational(1)});
  return from_intervals(std::move(out));
}

IntervalSet interval_union(const IntervalSet& a, const IntervalSet& b) { return a.unite(b); }
IntervalSet interval_intersect(const IntervalSet& a, const IntervalSet& b) { return a.intersect(b); }
IntervalSet interval_complement(const IntervalSet& a) { return a.complement(); }
Rational measure(const IntervalSet& a) { return a.measure(); }

}  // namespace sumint
