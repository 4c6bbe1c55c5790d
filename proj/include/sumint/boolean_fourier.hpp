#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "sumint/int_set.hpp"
#include "sumint/lp_certificate.hpp"
#include "sumint/rational.hpp"

namespace sumint {

inline constexpr unsigned kMaxFourierDimension = 16;

/// Real function on F_2^n, values indexed by bitmask (bit i-1 <-> element i).
struct BooleanFunction {
  unsigned n = 0;
  std::vector<Rational> values;

  static BooleanFunction zeros(unsigned n);
  const Rational& operator[](std::uint64_t mask) const { return values[mask]; }
  Rational& operator[](std::uint64_t mask) { return values[mask]; }
  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;
};

/// Family of subsets of [n] as sorted, distinct bitmasks.
struct SetFamily {
  unsigned n = 0;
  std::vector<std::uint64_t> members;

  static SetFamily from_masks(unsigned n, std::vector<std::uint64_t> masks);
  static SetFamily from_sets(unsigned n, const std::vector<IntSet>& sets);
  /// "superset:1,2" (every superset of {1,2} in [n]), "explicit:1,2;1,2,3"
  /// (listed sets, ';'-separated, an empty item is the empty set) or "all".
  static SetFamily parse(unsigned n, std::string_view spec);

  std::size_t size() const { return members.size(); }
  std::vector<IntSet> sets() const;
  BooleanFunction indicator() const;
};

/// f^(lambda) = 2^-n sum_x (-1)^<lambda,x> f(x).
BooleanFunction wht(const BooleanFunction& f);
/// f(x) = sum_lambda (-1)^<lambda,x> g(lambda).
BooleanFunction inverse_wht(const BooleanFunction& g);
/// (f * g)(z) = 2^-n sum_y f(y) g(z + y), computed through the transform.
BooleanFunction convolve(const BooleanFunction& f, const BooleanFunction& g);

/// nu with nu^(lambda) = (-1)^|lambda| sum_j c_j P[|lambda_alpha| = j], i.e. nu^ = mu.
struct NuConstruction {
  BooleanFunction nu;
  BooleanFunction nu_hat;
};
NuConstruction build_nu(unsigned n, const Certificate& cert);

/// (1_F * 1_F * nu)(0) = 4^-n sum_{A,B in F} nu(A xor B). Throws
/// NotSumIntersecting unless F is sum-intersecting.
Rational verify_intersecting_identity(const SetFamily& family, const BooleanFunction& nu);

struct FourierBoundReport {
  Rational density;           // |F| / 2^n
  Rational bound;             // 1 / (1 + c_0)
  bool holds = false;         // density <= bound
  Rational identity;          // (1_F * 1_F * nu)(0)
  Rational identity_spectral;  // sum_lambda f^(lambda)^2 nu^(lambda), same quantity
  Rational min_nu_hat;
  Rational chain_value;       // f^(0)^2 nu^(0) - (f^(0) - f^(0)^2), must be <= 0
  std::uint64_t family_size = 0;
};

/// Checks the Fourier LP bound for one family. The certificate must satisfy
/// mu >= -1 on every subset of [n] (checked here), else Precondition is thrown.
FourierBoundReport fourier_bound_check(const SetFamily& family, const Certificate& cert);

struct PointMassReport {
  bool pass = false;
  std::uint64_t pairs_checked = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> offending;  // (S1, S2) with S1 xor S2 = T
};

/// For nu a point mass at T with [n] \ T sum-free: no two members of F differ by exactly T.
PointMassReport pointmass_check(unsigned n, const IntSet& t, const SetFamily& family);

}  // namespace sumint
