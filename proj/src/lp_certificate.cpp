#include "sumint/lp_certificate.hpp"

#include "sumint/error.hpp"
#include "sumint/parallel.hpp"
#include "sumint/simplex.hpp"

namespace sumint {

namespace {

constexpr std::string_view kFinitePoolCaveat =
    "finite pool only: mu >= -1 was checked on the listed sets, not on every finite set";

std::string pool_caveat(const ConstraintPool& pool) {
  return std::string(kFinitePoolCaveat) + " (" + std::to_string(pool.sets.size()) + " primitive sets, elements <= " +
         std::to_string(pool.max_element) + ", size <= " + std::to_string(pool.max_size) + ")";
}

}  // namespace

Certificate Certificate::parse(std::string_view text) {
  Certificate cert;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    cert.coeffs.push_back(Rational::parse(tok));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return cert;
}

std::vector<std::string> Certificate::strs() const {
  std::vector<std::string> out;
  for (const Rational& c : coeffs) out.push_back(c.str());
  return out;
}

std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Valid: return "VALID";
    case VerdictStatus::Violated: return "VIOLATED";
    case VerdictStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

Rational mu(const LevelDistribution& dist, const Certificate& cert) {
  if (cert.coeffs.empty()) fail(ErrorCode::InvalidArgument, "certificate has no coefficients");
  Rational total;
  for (std::size_t j = 0; j < cert.coeffs.size() && j < dist.probs.size(); ++j)
    total += cert.coeffs[j] * dist.probs[j];
  return dist.set.size() % 2 == 0 ? total : -total;
}

Rational mu(const IntSet& s, const Certificate& cert) { return mu(level_distribution(s), cert); }

Rational bound_from_certificate(const Certificate& cert) {
  if (cert.coeffs.empty()) fail(ErrorCode::InvalidArgument, "certificate has no coefficients");
  if (cert.c0() <= Rational(-1))
    fail(ErrorCode::InvalidArgument, "c_0 = " + cert.c0().str() + " <= -1 gives no bound");
  return (Rational(1) + cert.c0()).reciprocal();
}

ConstraintPool build_pool(std::uint64_t max_element, std::uint64_t max_size) {
  if (max_element < 1 || max_size < 1 || max_size > max_element)
    fail(ErrorCode::InvalidArgument, "pool needs max_element >= max_size >= 1");
  ConstraintPool pool{{IntSet{}}, max_element, max_size};
  for (std::uint64_t k = 1; k <= max_size; ++k) {
    auto sets = primitive_subsets(max_element, k);
    pool.sets.insert(pool.sets.end(), std::make_move_iterator(sets.begin()), std::make_move_iterator(sets.end()));
  }
  return pool;
}

Verdict verify_certificate_finite(const Certificate& cert, const ConstraintPool& pool) {
  if (cert.coeffs.empty()) fail(ErrorCode::InvalidArgument, "certificate has no coefficients");
  const auto values = parallel_map<Rational>(pool.sets.size(), [&](std::size_t i) { return mu(pool.sets[i], cert); });
  Verdict v;
  v.checked = pool.sets.size();
  const Rational floor(-1);
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] < floor) {
      v.witnesses.push_back(pool.sets[i]);
      v.witness_values.push_back(values[i]);
    }
  if (!v.witnesses.empty()) {
    v.status = VerdictStatus::Violated;
    return v;
  }
  if (cert.c0() <= floor) {
    v.status = VerdictStatus::Inconclusive;
    v.stage = "degenerate-objective";
    return v;
  }
  v.status = VerdictStatus::Valid;
  v.bound = bound_from_certificate(cert);
  v.caveat = pool_caveat(pool);
  return v;
}

Verdict tail_verify(const Certificate& cert) {
  Verdict v;
  if (cert.coeffs.size() != 2 || cert.coeffs[0].sign() < 0 || cert.coeffs[1].sign() > 0) {
    v.status = VerdictStatus::Inconclusive;
    v.stage = "sign-regime";
    v.caveat = "tail casework covers two-coefficient certificates with c_0 >= 0 >= c_1 only";
    return v;
  }
  const Rational& c0 = cert.coeffs[0];
  const Rational& c1 = cert.coeffs[1];
  const Rational one(1), minus_one(-1);

  auto ge = [&](std::string name, std::string desc, Rational value, Rational limit) {
    const bool ok = value >= limit;
    v.stages.push_back({std::move(name), std::move(desc), std::move(value), std::move(limit), ok});
  };
  auto le = [&](std::string name, std::string desc, Rational value, Rational limit) {
    const bool ok = value <= limit;
    v.stages.push_back({std::move(name), std::move(desc), std::move(value), std::move(limit), ok});
  };

  ge("s0", "|S| = 0: mu = c_0 >= -1", c0, minus_one);
  // p_empty = 2/3 and p_1 = 1/3 for every singleton.
  le("s1", "|S| = 1: 2/3 c_0 + 1/3 c_1 <= 1", Rational(2, 3) * c0 + Rational(1, 3) * c1, one);
  // For pairs p_empty = 4/9 + 2E/9 and p_1 = 4/9 - 4E/9 with E in [-1/2, 1/4];
  // mu is affine in E, so the two endpoints decide.
  Rational pair_min;
  for (const Rational& e : {Rational(-1, 2), Rational(1, 4)}) {
    const Rational p0 = Rational(4, 9) + Rational(2, 9) * e;
    const Rational p1 = Rational(4, 9) - Rational(4, 9) * e;
    const Rational val = c0 * p0 + c1 * p1;
    if (e == Rational(-1, 2) || val < pair_min) pair_min = val;
  }
  ge("s2", "|S| = 2: min over E in {-1/2, 1/4} of c_0 p_empty + c_1 p_1 >= -1", pair_min, minus_one);
  le("s3", "|S| odd >= 3: c_0 * 11/24 <= 1", c0 * Rational(11, 24), one);
  ge("s4", "|S| = 4: c_0 * 2/67 + c_1 * 512/603 >= -1", c0 * Rational(2, 67) + c1 * Rational(512, 603), minus_one);
  ge("s5", "|S| even >= 6: c_1 * 4/5 >= -1", c1 * Rational(4, 5), minus_one);

  for (const TailStage& s : v.stages)
    if (!s.passed) {
      v.status = VerdictStatus::Inconclusive;
      v.stage = s.name;
      v.caveat = "stage conditions are sufficient, not necessary";
      return v;
    }
  v.status = VerdictStatus::Valid;
  v.bound = bound_from_certificate(cert);
  return v;
}

LpSearchResult lp_search(const ConstraintPool& pool, std::size_t m) {
  // Primal:  max c_0  s.t.  -a_S . c <= 1  for S in pool, c free, with
  //          a_S[j] = (-1)^|S| P[|S_alpha| = j].
  // Dual:    min sum_S y_S  s.t.  sum_S y_S (-a_S) = e_0,  y >= 0.
  // Optimal primal c = simplex multipliers of the dual.
  const std::size_t rows = m + 1;
  const auto dists = parallel_map<LevelDistribution>(pool.sets.size(),
                                                     [&](std::size_t i) { return level_distribution(pool.sets[i]); });
  StandardFormLp lp;
  lp.rows = rows;
  lp.rhs.assign(rows, Rational(0));
  lp.rhs[0] = Rational(1);
  for (const LevelDistribution& d : dists) {
    std::vector<Rational> col(rows);
    const bool odd = d.set.size() % 2 == 1;
    for (std::size_t j = 0; j < rows; ++j) {
      const Rational p = d.level(j);
      col[j] = odd ? p : -p;
    }
    lp.columns.push_back(std::move(col));
    lp.cost.push_back(Rational(1));
  }

  const LpSolution sol = solve_standard_form(lp);
  if (sol.status == LpStatus::Infeasible)
    fail(ErrorCode::Unbounded, "unbounded: the pool does not bound c_0 for m = " + std::to_string(m));
  if (sol.status == LpStatus::Unbounded) fail(ErrorCode::Internal, "LP infeasible, but c = 0 is always feasible");

  LpSearchResult out;
  out.certificate.coeffs = sol.duals;
  out.constraints = pool.sets.size();
  out.pivots = sol.pivots;
  if (out.certificate.c0() != sol.objective) fail(ErrorCode::Internal, "LP duality gap is nonzero");
  out.recheck = verify_certificate_finite(out.certificate, pool);
  if (out.recheck.status != VerdictStatus::Valid)
    fail(ErrorCode::Internal, "LP optimum failed exact re-verification against its pool");
  out.bound = *out.recheck.bound;
  out.caveat = m == 1 ? "finite-pool candidate; tail-verify decides whether it holds for every set"
                      : "finite-pool candidate; the tail casework covers two-coefficient certificates only";
  return out;
}

}  // namespace sumint
