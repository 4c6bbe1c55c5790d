#pragma once

#include <vector>

#include "sumint/rational.hpp"

namespace sumint {

/// Half-open interval [lo, hi) inside [0, 1).
struct Interval {
  Rational lo;
  Rational hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of half-open subintervals of [0, 1) in canonical form:
/// sorted, pairwise disjoint, non-empty, and with touching neighbours merged.
/// Two sets describe the same region iff they compare equal.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Builds the canonical form of an arbitrary list of intervals. Empty
  /// intervals are dropped; an interval escaping [0, 1) throws.
  static IntervalSet from_intervals(std::vector<Interval> intervals);
  static IntervalSet full();

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  std::size_t size() const { return intervals_.size(); }

  bool contains(const Rational& alpha) const;
  Rational measure() const;

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet complement() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

IntervalSet interval_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet interval_intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet interval_complement(const IntervalSet& a);
Rational measure(const IntervalSet& a);

}  // namespace sumint
