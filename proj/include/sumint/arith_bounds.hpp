#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumint/int_set.hpp"
#include "sumint/rational.hpp"

namespace sumint {

/// Outcome of an exhaustive finite-range check.
///
/// `extremum` is the optimum of the scanned quantity (its meaning depends on
/// `check`), `witnesses` the sets attaining it and `violations` the sets that
/// break the asserted inequality. Both lists are sorted lexicographically.
struct ScanReport {
  std::string check;
  std::uint64_t max_element = 0;
  std::uint64_t set_size = 0;
  std::uint64_t checked = 0;
  Rational extremum;
  std::vector<IntSet> witnesses;
  std::vector<IntSet> violations;
  std::optional<Rational> threshold;

  // observation check: every attained positive / negative error value, ascending
  std::vector<Rational> positive_values;
  std::vector<Rational> negative_values;

  // bohr scan: smallest p_empty seen and where
  std::optional<Rational> min_pzero;
  std::vector<IntSet> min_pzero_witnesses;

  bool holds() const { return violations.empty(); }
};

/// Multiplicative character mod 3: 0, 1, -1 for k = 0, 1, 2 (mod 3).
int chi(std::uint64_t k);

/// chi(xy) gcd(x,y)^2 / (xy). Rejects x = y and zero arguments.
Rational error_fn(std::uint64_t x, std::uint64_t y);

/// Closed form for P[|{x,y}_alpha| = 2] = 1/9 + 2/9 E(x, y).
Rational two_point_prob(std::uint64_t x, std::uint64_t y);

/// Compares the closed form against the interval-intersection measure for every pair x < y <= max.
ScanReport verify_two_point_formula(std::uint64_t max);

/// Over all pairs <= max: E <= 1/4, and every positive value is 1/(3k+1).
ScanReport observation_checks(std::uint64_t max);

/// Max of E(x,y) + E(y,z) + E(x,z) over primitive triples <= max; asserts <= 9/16.
ScanReport scan_triple_bound(std::uint64_t max);

/// Max p_empty over primitive sets of exactly `size` elements <= max.
/// Asserts 1/2 for pairs and 11/24 for size >= 3.
ScanReport scan_pzero_bounds(std::uint64_t max, std::uint64_t size);

/// 2 / (t^k - 2^k + 2).
Rational bohr_lower_bound(std::uint64_t k, std::uint64_t t);

/// p_empty(S) >= bohr_lower_bound(|S|, 3) for every primitive S, 1 <= |S| <= max_size, elements <= max.
/// extremum is the minimum slack p_empty - bound.
ScanReport scan_bohr(std::uint64_t max, std::uint64_t max_size);

}  // namespace sumint
