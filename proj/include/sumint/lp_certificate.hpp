#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sumint/int_set.hpp"
#include "sumint/rational.hpp"
#include "sumint/sumfree_measure.hpp"

namespace sumint {

/// Coefficients (c_0, ..., c_m) of the level weights. The associated test
/// function is mu(S) = (-1)^|S| sum_j c_j P[|S_alpha| = j], and c_0 is the
/// objective value.
struct Certificate {
  std::vector<Rational> coeffs;

  /// "17/8,-5/4"
  static Certificate parse(std::string_view text);
  const Rational& c0() const { return coeffs.front(); }
  std::size_t degree() const { return coeffs.size() - 1; }
  std::vector<std::string> strs() const;
};

/// Deduplicated primitive sets (plus the empty set) used as a finite stand-in
/// for the full constraint family.
struct ConstraintPool {
  std::vector<IntSet> sets;
  std::uint64_t max_element = 0;
  std::uint64_t max_size = 0;
};

enum class VerdictStatus { Valid, Violated, Inconclusive };
std::string_view to_string(VerdictStatus s);

/// One sufficient condition of the tail casework.
struct TailStage {
  std::string name;
  std::string description;
  Rational value;  // left-hand side as evaluated
  Rational limit;  // what it is compared against
  bool passed = false;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  std::vector<IntSet> witnesses;        // failing sets (VIOLATED)
  std::vector<Rational> witness_values;  // mu at each witness
  std::string stage;                     // failing stage (INCONCLUSIVE)
  std::optional<Rational> bound;         // 1/(1+c_0) when VALID
  std::string caveat;
  std::vector<TailStage> stages;
  std::uint64_t checked = 0;
};

Rational mu(const LevelDistribution& dist, const Certificate& cert);
Rational mu(const IntSet& s, const Certificate& cert);

/// 1/(1 + c_0), the bound on |F| / 2^n. Rejects c_0 <= -1.
Rational bound_from_certificate(const Certificate& cert);

/// The empty set followed by every primitive subset of {1..max_element} with
/// 1..max_size elements, ordered by size then lexicographically.
ConstraintPool build_pool(std::uint64_t max_element, std::uint64_t max_size);

/// Exact check of mu(S) >= -1 on every pool member.
Verdict verify_certificate_finite(const Certificate& cert, const ConstraintPool& pool);

/// Size-by-size casework that certifies mu >= -1 for every finite S, for
/// two-coefficient certificates with c_0 >= 0 >= c_1. The stage conditions are
/// sufficient only, so failure yields INCONCLUSIVE rather than VIOLATED.
Verdict tail_verify(const Certificate& cert);

struct LpSearchResult {
  Certificate certificate;
  Rational bound;   // candidate 1/(1+c_0), valid for the pool only
  Verdict recheck;  // verify_certificate_finite on the same pool
  std::string caveat;
  std::size_t constraints = 0;
  std::size_t pivots = 0;
};

/// Maximise c_0 over (c_0..c_m) subject to mu(S) >= -1 for all S in the pool.
/// Solved exactly through its dual (few rows, one column per pool set); the
/// certificate is read off the optimal simplex multipliers. Throws
/// ErrorCode::Unbounded when the pool does not bound c_0.
LpSearchResult lp_search(const ConstraintPool& pool, std::size_t m);

}  // namespace sumint
