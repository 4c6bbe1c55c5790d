#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "oracles.hpp"
#include "sumint/boolean_fourier.hpp"
#include "sumint/error.hpp"
#include "sumint/extremal_search.hpp"
#include "sumint/lp_certificate.hpp"
#include "sumint/sumfree_measure.hpp"

using sumint::BooleanFunction;
using sumint::Certificate;
using sumint::Error;
using sumint::ErrorCode;
using sumint::IntSet;
using sumint::Rational;
using sumint::SetFamily;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

BooleanFunction random_function(unsigned n, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  BooleanFunction f = BooleanFunction::zeros(n);
  for (auto& v : f.values) v = q(num(rng), den(rng));
  return f;
}

BooleanFunction delta(unsigned n, std::uint64_t at, Rational value = Rational(1)) {
  BooleanFunction f = BooleanFunction::zeros(n);
  f[at] = value;
  return f;
}

BooleanFunction constant(unsigned n, Rational value) {
  BooleanFunction f = BooleanFunction::zeros(n);
  for (auto& v : f.values) v = value;
  return f;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

const Certificate kBound825 = Certificate::parse("17/8,-5/4");
const Certificate kBound13 = Certificate::parse("2,-1");

}  // namespace

TEST_CASE("transform examples") {
  CHECK(sumint::wht(delta(2, 0)) == constant(2, q(1, 4)));
  CHECK(sumint::wht(constant(3, q(1))) == delta(3, 0));
  BooleanFunction chr = BooleanFunction::zeros(2);
  for (std::uint64_t x = 0; x < 4; ++x) chr[x] = (x & 1U) ? q(-1) : q(1);
  CHECK(sumint::wht(chr) == delta(2, 1));

  CHECK(sumint::inverse_wht(delta(3, 0)) == constant(3, q(1)));
  CHECK(sumint::inverse_wht(constant(3, q(1, 8))) == delta(3, 0));
  CHECK(sumint::wht(BooleanFunction::zeros(0)) == BooleanFunction::zeros(0));
}

TEST_CASE("transform against the direct sum") {
  std::mt19937 rng(1);
  for (unsigned n = 0; n <= 6; ++n) {
    const BooleanFunction f = random_function(n, rng);
    CHECK(sumint::wht(f).values == oracle::wht_direct(f.values));
  }
}

TEST_CASE("inversion and Parseval") {
  std::mt19937 rng(2);
  for (unsigned n = 0; n <= 8; ++n) {
    const BooleanFunction f = random_function(n, rng);
    const BooleanFunction fh = sumint::wht(f);
    CHECK(sumint::inverse_wht(fh) == f);
    Rational lhs, rhs;
    for (const auto& v : f.values) lhs += v * v;
    lhs /= Rational(static_cast<std::int64_t>(f.values.size()));
    for (const auto& v : fh.values) rhs += v * v;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("convolution") {
  std::mt19937 rng(3);
  const BooleanFunction f4 = random_function(4, rng);
  BooleanFunction scaled = f4;
  for (auto& v : scaled.values) v /= q(16);
  CHECK(sumint::convolve(delta(4, 0), f4) == scaled);
  CHECK(sumint::convolve(constant(3, q(1)), constant(3, q(1))) == constant(3, q(1)));
  for (unsigned n = 1; n <= 6; ++n) {
    const BooleanFunction f = random_function(n, rng);
    const BooleanFunction g = random_function(n, rng);
    const BooleanFunction c = sumint::convolve(f, g);
    CHECK(c.values == oracle::convolve_direct(f.values, g.values));
    const BooleanFunction ch = sumint::wht(c), fh = sumint::wht(f), gh = sumint::wht(g);
    for (std::size_t l = 0; l < ch.values.size(); ++l) CHECK(ch.values[l] == fh.values[l] * gh.values[l]);
  }
  CHECK(code_of([] { sumint::convolve(BooleanFunction::zeros(2), BooleanFunction::zeros(3)); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("set families") {
  const SetFamily sup = SetFamily::parse(3, "superset:1,2");
  CHECK(sup.members == std::vector<std::uint64_t>{0b011, 0b111});
  const SetFamily ex = SetFamily::parse(3, "explicit:1,2;1,2,3;");
  CHECK(ex.members == std::vector<std::uint64_t>{0, 0b011, 0b111});
  CHECK(SetFamily::parse(2, "all").size() == 4);
  CHECK_THROWS_AS(SetFamily::parse(2, "superset:3"), Error);
  CHECK_THROWS_AS(SetFamily::parse(2, "bogus:1"), Error);
  for (std::uint64_t m = 0; m < 32; ++m) CHECK(IntSet::from_mask(m).to_mask() == m);
  CHECK(IntSet::from_mask(0b101) == IntSet::parse("1,3"));
}

TEST_CASE("nu construction examples") {
  const auto one = sumint::build_nu(1, kBound825);
  CHECK(one.nu_hat.values == std::vector<Rational>{q(17, 8), q(-1)});
  CHECK(sumint::wht(one.nu) == one.nu_hat);

  const Rational c0(5, 3), c1(-2, 7);
  const auto two = sumint::build_nu(2, Certificate{{c0, c1}});
  CHECK(two.nu_hat[0] == c0);
  CHECK(two.nu_hat[0b01] == -(c0 * q(2, 3) + c1 * q(1, 3)));
  CHECK(two.nu_hat[0b10] == -(c0 * q(2, 3) + c1 * q(1, 3)));
  CHECK(two.nu_hat[0b11] == c0 * q(1, 3) + c1 * q(2, 3));

  const auto single = sumint::build_nu(5, Certificate::parse("1"));
  for (std::uint64_t l = 0; l < 32; ++l) {
    const Rational p0 = sumint::level_distribution(IntSet::from_mask(l)).p_empty();
    CHECK(single.nu_hat[l] == (std::popcount(l) % 2 ? -p0 : p0));
  }
  CHECK_THROWS_AS(sumint::build_nu(sumint::kMaxFourierDimension + 1, kBound825), Error);
}

TEST_CASE("intersecting identity examples") {
  CHECK(sumint::verify_intersecting_identity(SetFamily::parse(4, "superset:1,2"), sumint::build_nu(4, kBound825).nu) ==
        q(0));
  CHECK(sumint::verify_intersecting_identity(SetFamily::parse(3, "superset:1,2"), sumint::build_nu(3, kBound13).nu) ==
        q(0));
  CHECK(code_of([] {
          sumint::verify_intersecting_identity(SetFamily::parse(2, "all"), sumint::build_nu(2, kBound13).nu);
        }) == ErrorCode::NotSumIntersecting);
}

TEST_CASE("Fourier bound examples") {
  const auto six = sumint::fourier_bound_check(SetFamily::parse(6, "superset:1,2"), kBound825);
  CHECK(six.density == q(1, 4));
  CHECK(six.bound == q(8, 25));
  CHECK(six.holds);
  CHECK(six.identity == q(0));
  CHECK(six.identity_spectral == q(0));
  CHECK(six.chain_value <= q(0));

  const auto four = sumint::fourier_bound_check(SetFamily::parse(4, "superset:1,2"), kBound13);
  CHECK(four.density == q(1, 4));
  CHECK(four.bound == q(1, 3));
  CHECK(four.holds);

  const auto three = sumint::fourier_bound_check(SetFamily::parse(3, "explicit:1,2;1,2,3"), kBound825);
  CHECK(three.density == q(1, 4));
  CHECK(three.holds);
  CHECK(three.family_size == 2);

  CHECK(code_of([] { sumint::fourier_bound_check(SetFamily::parse(3, "superset:1,2"), Certificate::parse("3,-1")); }) ==
        ErrorCode::Precondition);
  CHECK(code_of([] { sumint::fourier_bound_check(SetFamily::parse(3, "explicit:1"), kBound825); }) ==
        ErrorCode::NotSumIntersecting);
}

TEST_CASE("point mass examples") {
  const auto pass = sumint::pointmass_check(3, IntSet::parse("1"), SetFamily::parse(3, "superset:1,2"));
  CHECK(pass.pass);
  CHECK(pass.offending.empty());
  CHECK(code_of([] { sumint::pointmass_check(3, IntSet(), SetFamily::parse(3, "superset:1,2")); }) ==
        ErrorCode::ComplementNotSumFree);
  CHECK(sumint::pointmass_check(2, IntSet::parse("1,2"), SetFamily::parse(2, "explicit:1,2")).pass);
  CHECK(code_of([] { sumint::pointmass_check(3, IntSet::parse("1"), SetFamily::parse(3, "explicit:1")); }) ==
        ErrorCode::NotSumIntersecting);
}

TEST_CASE("identity vanishes on extremal families") {
  const std::vector<Certificate> certs{kBound825, kBound13, Certificate::parse("3,-3"), Certificate::parse("1/2")};
  for (unsigned n = 2; n <= 5; ++n) {
    const auto res = sumint::max_family(n, sumint::IntersectionPredicate::sum());
    std::vector<SetFamily> families{res.witness};
    if (n >= 2) families.push_back(SetFamily::parse(n, "superset:1,2"));
    for (const Certificate& c : certs) {
      const auto nu = sumint::build_nu(n, c);
      for (const SetFamily& f : families) {
        CAPTURE(n);
        CHECK(sumint::verify_intersecting_identity(f, nu.nu) == q(0));
        // Spectral form of the same quantity.
        const BooleanFunction fh = sumint::wht(f.indicator());
        Rational spectral;
        for (std::size_t l = 0; l < fh.values.size(); ++l) spectral += fh.values[l] * fh.values[l] * nu.nu_hat.values[l];
        CHECK(spectral == q(0));
      }
    }
    for (const Certificate& c : {kBound825, kBound13}) {
      const auto r = sumint::fourier_bound_check(res.witness, c);
      CHECK(r.holds);
      CHECK(r.chain_value <= q(0));
      CHECK(r.min_nu_hat >= q(-1));
    }
  }
}
