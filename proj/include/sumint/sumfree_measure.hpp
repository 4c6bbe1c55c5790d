#pragma once

#include <vector>

#include "sumint/int_set.hpp"
#include "sumint/interval_set.hpp"
#include "sumint/rational.hpp"

namespace sumint {

/// Exact law of |S_alpha| for a fixed S: probs[j] = P[|S_alpha| = j], alpha uniform on [0, 1).
struct LevelDistribution {
  IntSet set;
  std::vector<Rational> probs;

  const Rational& p_empty() const { return probs.front(); }
  /// P[|S_alpha| = j], zero beyond |S|.
  Rational level(std::size_t j) const { return j < probs.size() ? probs[j] : Rational(0); }
};

/// {alpha in [0,1) : frac(alpha x) in [1/3, 2/3)}, a union of x intervals of
/// length 1/(3x). Throws for x = 0.
IntervalSet inclusion_region(std::uint64_t x);

/// Breakpoint sweep over all interval endpoints of the inclusion regions.
/// Every endpoint is an integer multiple of 1/(3 lcm(S)), so the sweep runs on
/// integer numerators over that common denominator.
LevelDistribution level_distribution(const IntSet& s);

/// P[T is contained in S_alpha] = measure of the intersection of the inclusion regions.
Rational joint_inclusion_prob(const IntSet& t);

/// The slice {x in S : frac(alpha x) in [1/3, 2/3)}. Requires 0 <= alpha < 1.
IntSet sample_slice(const IntSet& s, const Rational& alpha);

/// S divided by gcd(S). The empty set maps to itself.
IntSet primitive_form(const IntSet& s);

/// True iff no x, y, z in s (repeats allowed) satisfy x + y = z.
bool is_sum_free(const IntSet& s);

}  // namespace sumint
