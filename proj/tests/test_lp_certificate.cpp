#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sumint/error.hpp"
#include "sumint/lp_certificate.hpp"
#include "sumint/simplex.hpp"
#include "sumint/sumfree_measure.hpp"

using sumint::Certificate;
using sumint::ConstraintPool;
using sumint::Error;
using sumint::ErrorCode;
using sumint::IntSet;
using sumint::Rational;
using sumint::VerdictStatus;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

Certificate cert(const char* text) { return Certificate::parse(text); }

ConstraintPool pool_of(std::initializer_list<const char*> sets) {
  ConstraintPool p;
  for (const char* s : sets) p.sets.push_back(IntSet::parse(s));
  return p;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("certificate parsing") {
  const Certificate c = cert("17/8,-5/4");
  REQUIRE(c.degree() == 1);
  CHECK(c.c0() == q(17, 8));
  CHECK(c.coeffs[1] == q(-5, 4));
  CHECK(c.strs() == std::vector<std::string>{"17/8", "-5/4"});
  CHECK(cert("0").degree() == 0);
  CHECK_THROWS_AS(cert(""), Error);
  CHECK_THROWS_AS(cert("1,,2"), Error);
  CHECK_THROWS_AS(cert("1/0"), Error);
}

TEST_CASE("mu examples") {
  CHECK(sumint::mu(IntSet(), cert("2,-1")) == q(2));
  CHECK(sumint::mu(IntSet::parse("1"), cert("17/8,-5/4")) == q(-1));
  CHECK(sumint::mu(IntSet(), cert("17/8,-5/4")) == q(17, 8));
  // Coefficients beyond |S| contribute nothing.
  CHECK(sumint::mu(IntSet::parse("1"), cert("2,-1,100")) == sumint::mu(IntSet::parse("1"), cert("2,-1")));
  // {1,2}: levels (1/3, 2/3, 0), even size.
  CHECK(sumint::mu(IntSet::parse("1,2"), cert("3,-3")) == q(1) - q(2));
}

TEST_CASE("bound from certificate") {
  CHECK(sumint::bound_from_certificate(cert("17/8,-5/4")) == q(8, 25));
  CHECK(sumint::bound_from_certificate(cert("2,-1")) == q(1, 3));
  CHECK(sumint::bound_from_certificate(cert("3,-3")) == q(1, 4));
  CHECK(sumint::bound_from_certificate(cert("0")) == q(1));
  CHECK_THROWS_AS(sumint::bound_from_certificate(cert("-1,5")), Error);
  CHECK_THROWS_AS(sumint::bound_from_certificate(cert("-3/2")), Error);
}

TEST_CASE("build_pool") {
  auto strs = [](const ConstraintPool& p) {
    std::vector<std::string> out;
    for (const IntSet& s : p.sets) out.push_back(s.str());
    return out;
  };
  CHECK(strs(sumint::build_pool(2, 2)) == std::vector<std::string>{"", "1", "1,2"});
  CHECK(strs(sumint::build_pool(3, 1)) == std::vector<std::string>{"", "1"});
  CHECK(strs(sumint::build_pool(3, 2)) == std::vector<std::string>{"", "1", "1,2", "1,3", "2,3"});
  CHECK_THROWS_AS(sumint::build_pool(2, 3), Error);
  CHECK_THROWS_AS(sumint::build_pool(3, 0), Error);

  const ConstraintPool big = sumint::build_pool(12, 3);
  for (const IntSet& s : big.sets)
    if (!s.empty()) CHECK(s.is_primitive());
}

TEST_CASE("finite verification") {
  const auto v = sumint::verify_certificate_finite(cert("17/8,-5/4"), sumint::build_pool(12, 3));
  CHECK(v.status == VerdictStatus::Valid);
  REQUIRE(v.bound);
  CHECK(*v.bound == q(8, 25));
  CHECK_FALSE(v.caveat.empty());

  const auto bad = sumint::verify_certificate_finite(cert("3,-1"), sumint::build_pool(5, 2));
  CHECK(bad.status == VerdictStatus::Violated);
  REQUIRE_FALSE(bad.witnesses.empty());
  CHECK(bad.witnesses.front() == IntSet::parse("1"));
  CHECK(bad.witness_values.front() == q(-5, 3));
  CHECK_FALSE(bad.bound);

  const auto zero = sumint::verify_certificate_finite(cert("0"), sumint::build_pool(6, 3));
  CHECK(zero.status == VerdictStatus::Valid);
  CHECK(*zero.bound == q(1));

  const auto degenerate = sumint::verify_certificate_finite(cert("-2"), pool_of({"1"}));
  CHECK(sumint::verify_certificate_finite(cert("-2"), pool_of({""})).status == VerdictStatus::Violated);
  CHECK(degenerate.status == VerdictStatus::Inconclusive);
}

TEST_CASE("tail verification") {
  const auto sharp = sumint::tail_verify(cert("17/8,-5/4"));
  CHECK(sharp.status == VerdictStatus::Valid);
  CHECK(*sharp.bound == q(8, 25));
  CHECK(sharp.stages.size() == 6);
  for (const auto& st : sharp.stages) CHECK(st.passed);

  const auto third = sumint::tail_verify(cert("2,-1"));
  CHECK(third.status == VerdictStatus::Valid);
  CHECK(*third.bound == q(1, 3));

  const auto quarter = sumint::tail_verify(cert("3,-3"));
  CHECK(quarter.status == VerdictStatus::Inconclusive);
  CHECK(quarter.stage == "s3");

  CHECK(sumint::tail_verify(cert("2,-1,0")).stage == "sign-regime");
  CHECK(sumint::tail_verify(cert("-1,-1")).stage == "sign-regime");
  CHECK(sumint::tail_verify(cert("1,1")).stage == "sign-regime");
  CHECK(sumint::tail_verify(cert("1,1")).status == VerdictStatus::Inconclusive);
}

TEST_CASE("tail VALID implies finite VALID") {
  const ConstraintPool pool = sumint::build_pool(25, 4);
  std::mt19937 rng(11);
  std::vector<Certificate> valid{cert("17/8,-5/4"), cert("2,-1")};
  std::uniform_int_distribution<int> num(0, 40);
  for (int i = 0; i < 40; ++i) {
    Certificate c{{q(num(rng), 16), q(-num(rng), 16)}};
    if (sumint::tail_verify(c).status == VerdictStatus::Valid) valid.push_back(c);
  }
  CHECK(valid.size() > 2);
  for (const Certificate& c : valid)
    CHECK(sumint::verify_certificate_finite(c, pool).status == VerdictStatus::Valid);
}

TEST_CASE("mu depends only on the primitive form") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::uint64_t> elem(1, 12);
  std::uniform_int_distribution<std::uint64_t> scale(2, 4);
  const Certificate c = cert("17/8,-5/4,1/3");
  for (int i = 0; i < 60; ++i) {
    std::vector<std::uint64_t> xs;
    for (int k = 0; k < 3; ++k) xs.push_back(elem(rng));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    const IntSet s = IntSet::from_unsorted(xs);
    const IntSet scaled = s.scaled(scale(rng));
    CHECK(sumint::mu(scaled, c) == sumint::mu(sumint::primitive_form(scaled), c));
    CHECK(sumint::mu(s, c) == sumint::mu(scaled, c));
  }
}

TEST_CASE("simplex on small programs") {
  using sumint::LpStatus;
  using sumint::StandardFormLp;
  // min y1 + 2 y2  s.t.  y1 + y2 = 1  ->  y = (1, 0)
  StandardFormLp lp;
  lp.rows = 1;
  lp.columns = {{q(1)}, {q(1)}};
  lp.rhs = {q(1)};
  lp.cost = {q(1), q(2)};
  auto sol = sumint::solve_standard_form(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == q(1));
  CHECK(sol.primal == std::vector<Rational>{q(1), q(0)});
  CHECK(sol.duals == std::vector<Rational>{q(1)});

  // Negative rhs and a redundant row.
  lp.rows = 2;
  lp.columns = {{q(-1), q(-2)}, {q(-1), q(-2)}};
  lp.rhs = {q(-3), q(-6)};
  sol = sumint::solve_standard_form(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == q(3));

  // y1 - y2 = 1 with cost -y2: unbounded.
  lp.rows = 1;
  lp.columns = {{q(1)}, {q(-1)}};
  lp.rhs = {q(1)};
  lp.cost = {q(0), q(-1)};
  CHECK(sumint::solve_standard_form(lp).status == LpStatus::Unbounded);

  // y1 = -1: infeasible.
  lp.columns = {{q(1)}};
  lp.cost = {q(1)};
  lp.rhs = {q(-1)};
  CHECK(sumint::solve_standard_form(lp).status == LpStatus::Infeasible);
}

TEST_CASE("simplex duality on random programs") {
  using sumint::LpStatus;
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coef(-4, 6);
  for (int trial = 0; trial < 40; ++trial) {
    sumint::StandardFormLp lp;
    lp.rows = 3;
    for (int j = 0; j < 8; ++j) {
      lp.columns.push_back({q(coef(rng)), q(coef(rng)), q(coef(rng))});
      lp.cost.push_back(q(std::abs(coef(rng)) + 1));
    }
    lp.rhs = {q(coef(rng)), q(coef(rng)), q(coef(rng))};
    const auto sol = sumint::solve_standard_form(lp);
    if (sol.status != LpStatus::Optimal) continue;
    Rational obj;
    for (std::size_t j = 0; j < lp.columns.size(); ++j) {
      CHECK(sol.primal[j] >= q(0));
      obj += lp.cost[j] * sol.primal[j];
      Rational reduced = lp.cost[j];
      for (std::size_t i = 0; i < lp.rows; ++i) reduced -= sol.duals[i] * lp.columns[j][i];
      CHECK(reduced >= q(0));
    }
    CHECK(obj == sol.objective);
    for (std::size_t i = 0; i < lp.rows; ++i) {
      Rational lhs;
      for (std::size_t j = 0; j < lp.columns.size(); ++j) lhs += lp.columns[j][i] * sol.primal[j];
      CHECK(lhs == lp.rhs[i]);
    }
    Rational dual_obj;
    for (std::size_t i = 0; i < lp.rows; ++i) dual_obj += sol.duals[i] * lp.rhs[i];
    CHECK(dual_obj == sol.objective);
  }
}

TEST_CASE("lp_search on the minimal pool") {
  const auto r = sumint::lp_search(pool_of({"", "1", "1,2"}), 1);
  CHECK(r.certificate.coeffs == std::vector<Rational>{q(3), q(-3)});
  CHECK(r.bound == q(1, 4));
  CHECK(r.recheck.status == VerdictStatus::Valid);
  CHECK(r.constraints == 3);

  CHECK(r.certificate.c0() == *oracle::lp_max_c0_vertices(pool_of({"", "1", "1,2"})));
  CHECK(sumint::lp_search(sumint::build_pool(2, 2), 1).certificate.c0() == q(3));
}

TEST_CASE("lp_search unbounded pools") {
  CHECK(code_of([] { sumint::lp_search(pool_of({""}), 1); }) == ErrorCode::Unbounded);
  CHECK(code_of([] { sumint::lp_search(pool_of({"", "1"}), 2); }) == ErrorCode::Unbounded);
}

TEST_CASE("lp_search agrees with vertex enumeration") {
  for (auto [m, k] : {std::pair{3, 2}, {6, 2}, {8, 3}, {10, 3}}) {
    const ConstraintPool pool = sumint::build_pool(m, k);
    const auto r = sumint::lp_search(pool, 1);
    CAPTURE(m);
    CAPTURE(k);
    CHECK(r.certificate.c0() == *oracle::lp_max_c0_vertices(pool));
    CHECK(r.recheck.status == VerdictStatus::Valid);
  }
}

TEST_CASE("lp_search monotonicity") {
  const ConstraintPool small = sumint::build_pool(8, 3);
  const ConstraintPool large = sumint::build_pool(12, 3);
  const Rational s1 = sumint::lp_search(small, 1).certificate.c0();
  const Rational s2 = sumint::lp_search(small, 2).certificate.c0();
  const Rational s3 = sumint::lp_search(small, 3).certificate.c0();
  CHECK(s1 <= s2);
  CHECK(s2 <= s3);
  CHECK(sumint::lp_search(large, 1).certificate.c0() <= s1);
  CHECK(sumint::lp_search(large, 2).certificate.c0() <= s2);
}

TEST_CASE("lp_search on the (20, 4) pool dominates the known certificate") {
  const ConstraintPool pool = sumint::build_pool(20, 4);
  const auto r = sumint::lp_search(pool, 1);
  CHECK(r.certificate.c0() >= q(17, 8));
  CHECK(r.recheck.status == VerdictStatus::Valid);
  CHECK(r.recheck.checked == pool.sets.size());
  CHECK(sumint::verify_certificate_finite(r.certificate, pool).status == VerdictStatus::Valid);
}
