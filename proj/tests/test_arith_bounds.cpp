#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "sumint/arith_bounds.hpp"
#include "sumint/error.hpp"
#include "sumint/sumfree_measure.hpp"

using namespace sumint;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

bool has(const std::vector<IntSet>& v, const IntSet& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

// E recovered from the interval measure: P[both] = 1/9 + 2/9 E.
Rational error_from_measure(std::uint64_t x, std::uint64_t y) {
  return (joint_inclusion_prob(IntSet::from_unsorted({x, y})) - q(1, 9)) * q(9, 2);
}

}  // namespace

TEST_CASE("character mod 3") {
  CHECK(chi(0) == 0);
  CHECK(chi(1) == 1);
  CHECK(chi(2) == -1);
  CHECK(chi(4) == 1);
  CHECK(chi(6) == 0);
}

TEST_CASE("error function") {
  CHECK(error_fn(1, 4) == q(1, 4));
  CHECK(error_fn(2, 8) == q(1, 4));
  CHECK(error_fn(1, 2) == q(-1, 2));
  CHECK(error_fn(1, 3) == q(0));
  CHECK(error_fn(3, 6) == q(-1, 2));
  CHECK(two_point_prob(3, 6) == joint_inclusion_prob(IntSet::parse("3,6")));
  CHECK_THROWS_AS(error_fn(5, 5), Error);
  CHECK_THROWS_AS(error_fn(0, 5), Error);
}

TEST_CASE("two-point closed form") {
  CHECK(two_point_prob(1, 4) == q(1, 6));
  CHECK(two_point_prob(1, 2) == q(0));
  CHECK(two_point_prob(1, 3) == q(1, 9));
}

TEST_CASE("error function properties for all pairs up to 100") {
  for (std::uint64_t x = 1; x <= 100; ++x)
    for (std::uint64_t y = 1; y <= 100; ++y) {
      if (x == y) continue;
      const Rational e = error_fn(x, y);
      const std::uint64_t g = std::gcd(x, y);
      CHECK(e == error_fn(y, x));
      CHECK(e == error_fn(x / g, y / g));
      CHECK(e >= q(-1, 2));
      CHECK(e <= q(1, 4));
      if (e.sign() > 0) {
        CHECK(e.reciprocal().is_integer());
        CHECK(e.reciprocal().numerator() % 3 == 1);
      }
    }
}

TEST_CASE("two-point formula against interval measure") {
  const ScanReport two = verify_two_point_formula(2);
  CHECK(two.checked == 1);
  CHECK(two.violations.empty());
  CHECK(verify_two_point_formula(10).violations.empty());
  const ScanReport full = verify_two_point_formula(100);
  CHECK(full.checked == 4950);
  CHECK(full.holds());
  CHECK(full.extremum == q(1, 6));
  CHECK(has(full.witnesses, IntSet{1, 4}));
  CHECK_THROWS_AS(verify_two_point_formula(1), Error);
}

TEST_CASE("observation checks") {
  const ScanReport r = observation_checks(20);
  CHECK(r.holds());
  CHECK(r.extremum == q(1, 4));
  CHECK(has(r.witnesses, IntSet{1, 4}));
  // every witness has ratio 4
  for (const IntSet& w : r.witnesses) CHECK(w.elements()[1] == 4 * w.elements()[0]);

  // positive values through the measure route
  std::set<Rational> expected;
  for (std::uint64_t x = 1; x <= 20; ++x)
    for (std::uint64_t y = x + 1; y <= 20; ++y) {
      const Rational e = error_from_measure(x, y);
      if (e.sign() > 0) expected.insert(e);
    }
  CHECK(std::vector<Rational>(expected.begin(), expected.end()) == r.positive_values);
  for (const Rational& v : {q(1, 4), q(1, 7), q(1, 10), q(1, 13), q(1, 16), q(1, 19)})
    CHECK(std::find(r.positive_values.begin(), r.positive_values.end(), v) != r.positive_values.end());
  // coprime pairs such as (2, 11) and (4, 7) add values below 1/19
  CHECK(std::find(r.positive_values.begin(), r.positive_values.end(), q(1, 22)) != r.positive_values.end());
  CHECK(std::find(r.positive_values.begin(), r.positive_values.end(), q(1, 28)) != r.positive_values.end());

  const ScanReport small = observation_checks(3);
  CHECK(small.positive_values.empty());
  CHECK(small.extremum == q(0));
  CHECK(small.negative_values == std::vector<Rational>{q(-1, 2)});
}

TEST_CASE("triple error-sum scan") {
  const ScanReport r16 = scan_triple_bound(16);
  CHECK(r16.extremum == q(9, 16));
  CHECK(r16.witnesses == std::vector<IntSet>{IntSet{1, 4, 16}});
  CHECK(r16.holds());

  const ScanReport r4 = scan_triple_bound(4);
  CHECK(r4.extremum == q(1, 4));
  CHECK(r4.witnesses == std::vector<IntSet>{IntSet{1, 3, 4}});

  CHECK(scan_triple_bound(15).extremum < q(9, 16));

  const ScanReport r60 = scan_triple_bound(60);
  CHECK(r60.holds());
  CHECK(r60.extremum == q(9, 16));
  CHECK(r60.witnesses == std::vector<IntSet>{IntSet{1, 4, 16}});
}

TEST_CASE("p_empty scans") {
  const ScanReport pairs = scan_pzero_bounds(50, 2);
  CHECK(pairs.holds());
  CHECK(pairs.extremum == q(1, 2));
  CHECK(has(pairs.witnesses, IntSet{1, 4}));

  const ScanReport triples = scan_pzero_bounds(20, 3);
  CHECK(triples.holds());
  CHECK(triples.extremum == q(7, 18));
  CHECK(triples.extremum <= q(11, 24));
  CHECK(triples.witnesses == std::vector<IntSet>{IntSet{1, 3, 4}});
  CHECK(*triples.threshold == q(11, 24));

  CHECK_THROWS_AS(scan_pzero_bounds(5, 1), Error);
}

TEST_CASE("Bohr lower bound") {
  CHECK(bohr_lower_bound(4, 3) == q(2, 67));
  CHECK(bohr_lower_bound(1, 3) == q(2, 3));
  CHECK(bohr_lower_bound(2, 3) == q(2, 7));
  CHECK_THROWS_AS(bohr_lower_bound(0, 3), Error);
  CHECK_THROWS_AS(bohr_lower_bound(2, 1), Error);
}

TEST_CASE("Bohr scans") {
  const ScanReport single = scan_bohr(5, 1);
  CHECK(single.holds());
  CHECK(single.extremum == q(0));
  CHECK(single.witnesses == std::vector<IntSet>{IntSet{1}});

  const ScanReport pairs = scan_bohr(12, 2);
  CHECK(pairs.holds());
  CHECK(*pairs.min_pzero == q(1, 3));
  CHECK(has(pairs.min_pzero_witnesses, IntSet{1, 2}));
  CHECK(*pairs.min_pzero >= q(2, 7));

  CHECK(scan_bohr(15, 3).holds());
}
