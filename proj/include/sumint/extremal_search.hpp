#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "sumint/boolean_fourier.hpp"
#include "sumint/int_set.hpp"
#include "sumint/rational.hpp"

namespace sumint {

enum class PatternKind { Sum, DistinctSum, KSum };

/// Which additive configuration every pairwise intersection must contain.
///   Sum          x + y = z, repeats allowed
///   DistinctSum  x + y = z with x, y, z pairwise distinct
///   KSum(k)      x_1 + ... + x_k = y, repeats allowed; KSum(2) is Sum
struct IntersectionPredicate {
  PatternKind kind = PatternKind::Sum;
  unsigned k = 2;

  static IntersectionPredicate sum() { return {}; }
  static IntersectionPredicate distinct_sum() { return {PatternKind::DistinctSum, 2}; }
  static IntersectionPredicate k_sum(unsigned k);
  /// "sum", "distinct-sum", "ksum:K".
  static IntersectionPredicate parse(std::string_view text);
  std::string name() const;

  friend bool operator==(const IntersectionPredicate&, const IntersectionPredicate&) = default;
};

inline constexpr unsigned kDefaultSearchCap = 7;

bool contains_pattern(const IntSet& a, const IntersectionPredicate& pred);
/// Same test on a subset of [63] given as a bitmask.
bool contains_pattern(std::uint64_t mask, const IntersectionPredicate& pred);

/// Every A cap B (A = B included) contains the pattern.
bool is_valid_family(const SetFamily& family, const IntersectionPredicate& pred);

/// All supersets of `base` within [n]. Throws unless base is inside [n] and contains the pattern.
SetFamily canonical_family(unsigned n, const IntSet& base, const IntersectionPredicate& pred);

struct SearchResult {
  unsigned n = 0;
  IntersectionPredicate predicate;
  std::uint64_t max_size = 0;
  SetFamily witness;                   // lexicographically least maximum family
  Rational conjectured;                // conjectured extremal fraction of 2^n
  std::uint64_t construction_size = 0;  // size of the superset construction, 0 if none fits
  std::uint64_t vertex_count = 0;
  std::uint64_t node_count = 0;
};

/// Exact maximum family by maximum clique: vertices are the pattern-containing
/// subsets of [n], edges join A, B whose intersection contains the pattern.
/// Branch and bound with greedy colouring bounds over a degeneracy order.
SearchResult max_family(unsigned n, const IntersectionPredicate& pred, unsigned cap = kDefaultSearchCap);

}  // namespace sumint
