#include "sumint/simplex.hpp"

#include <optional>

#include "sumint/error.hpp"

namespace sumint {

namespace {

using Matrix = std::vector<std::vector<Rational>>;  // row-major, square

class RevisedSimplex {
 public:
  // Columns [0, n) are structural, [n, n + m) artificial (identity).
  RevisedSimplex(const StandardFormLp& lp) : lp_(lp), m_(lp.rows), n_(lp.columns.size()) {
    rhs_ = lp.rhs;
    sign_.assign(m_, 1);
    for (std::size_t i = 0; i < m_; ++i)
      if (rhs_[i].sign() < 0) {
        sign_[i] = -1;
        rhs_[i] = -rhs_[i];
      }
    binv_.assign(m_, std::vector<Rational>(m_));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      binv_[i][i] = Rational(1);
      basis_[i] = n_ + i;
    }
    x_b_ = rhs_;
    active_row_.assign(m_, true);
  }

  LpSolution run() {
    LpSolution sol;
    // Phase 1: minimise the sum of artificials.
    std::vector<Rational> phase1(n_ + m_);
    for (std::size_t i = 0; i < m_; ++i) phase1[n_ + i] = Rational(1);
    if (!iterate(phase1, /*allow_artificial=*/false, sol.pivots))
      fail(ErrorCode::Internal, "phase 1 reported unbounded");
    Rational infeas;
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] >= n_) infeas += x_b_[i];
    if (infeas.sign() > 0) {
      sol.status = LpStatus::Infeasible;
      return sol;
    }
    drive_out_artificials(sol.pivots);

    // Phase 2 on the structural columns.
    std::vector<Rational> phase2(n_ + m_);
    for (std::size_t j = 0; j < n_; ++j) phase2[j] = lp_.cost[j];
    if (!iterate(phase2, false, sol.pivots)) {
      sol.status = LpStatus::Unbounded;
      return sol;
    }

    sol.status = LpStatus::Optimal;
    sol.primal.assign(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (active_row_[i] && basis_[i] < n_) sol.primal[basis_[i]] = x_b_[i];
    for (std::size_t j = 0; j < n_; ++j) sol.objective += lp_.cost[j] * sol.primal[j];
    const std::vector<Rational> pi = multipliers(phase2);
    sol.duals.resize(m_);
    for (std::size_t k = 0; k < m_; ++k) sol.duals[k] = sign_[k] > 0 ? pi[k] : -pi[k];
    return sol;
  }

 private:
  Rational entry(std::size_t col, std::size_t row) const {
    if (col >= n_) return Rational(col - n_ == row ? 1 : 0);
    const Rational& v = lp_.columns[col][row];
    return sign_[row] > 0 ? v : -v;
  }

  // u = B^{-1} A_col, restricted to active rows.
  std::vector<Rational> direction(std::size_t col) const {
    std::vector<Rational> a(m_);
    for (std::size_t k = 0; k < m_; ++k) a[k] = entry(col, k);
    std::vector<Rational> u(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_row_[i]) continue;
      Rational s;
      for (std::size_t k = 0; k < m_; ++k)
        if (!binv_[i][k].is_zero() && !a[k].is_zero()) s += binv_[i][k] * a[k];
      u[i] = std::move(s);
    }
    return u;
  }

  // pi = c_B^T B^{-1}, in the sign-adjusted row space.
  std::vector<Rational> multipliers(const std::vector<Rational>& cost) const {
    std::vector<Rational> pi(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_row_[i] || cost[basis_[i]].is_zero()) continue;
      for (std::size_t k = 0; k < m_; ++k)
        if (!binv_[i][k].is_zero()) pi[k] += cost[basis_[i]] * binv_[i][k];
    }
    return pi;
  }

  void pivot(std::size_t row, std::size_t col, const std::vector<Rational>& u) {
    const Rational piv = u[row];
    for (std::size_t k = 0; k < m_; ++k) binv_[row][k] /= piv;
    x_b_[row] /= piv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || !active_row_[i] || u[i].is_zero()) continue;
      const Rational f = u[i];
      for (std::size_t k = 0; k < m_; ++k)
        if (!binv_[row][k].is_zero()) binv_[i][k] -= f * binv_[row][k];
      x_b_[i] -= f * x_b_[row];
    }
    basis_[row] = col;
  }

  bool in_basis(std::size_t col) const {
    for (std::size_t i = 0; i < m_; ++i)
      if (active_row_[i] && basis_[i] == col) return true;
    return false;
  }

  // Returns false on unboundedness. Artificial columns never re-enter.
  bool iterate(const std::vector<Rational>& cost, bool allow_artificial, std::size_t& pivots) {
    const std::size_t limit = allow_artificial ? n_ + m_ : n_;
    while (true) {
      const std::vector<Rational> pi = multipliers(cost);
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < limit && !entering; ++j) {
        if (in_basis(j)) continue;
        Rational reduced = cost[j];
        for (std::size_t k = 0; k < m_; ++k)
          if (!pi[k].is_zero()) reduced -= pi[k] * entry(j, k);
        if (reduced.sign() < 0) entering = j;
      }
      if (!entering) return true;

      const std::vector<Rational> u = direction(*entering);
      std::optional<std::size_t> leave;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (!active_row_[i] || u[i].sign() <= 0) continue;
        const Rational ratio = x_b_[i] / u[i];
        if (!leave || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *entering, u);
      ++pivots;
    }
  }

  void drive_out_artificials(std::size_t& pivots) {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_row_[i] || basis_[i] < n_) continue;
      bool replaced = false;
      for (std::size_t j = 0; j < n_ && !replaced; ++j) {
        if (in_basis(j)) continue;
        const std::vector<Rational> u = direction(j);
        if (u[i].is_zero()) continue;
        pivot(i, j, u);
        ++pivots;
        replaced = true;
      }
      // No structural column reaches this row: the constraint is a linear
      // combination of the others and is dropped.
      if (!replaced) active_row_[i] = false;
    }
  }

  const StandardFormLp& lp_;
  std::size_t m_, n_;
  std::vector<Rational> rhs_;
  std::vector<int> sign_;
  Matrix binv_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> x_b_;
  std::vector<bool> active_row_;
};

}  // namespace

LpSolution solve_standard_form(const StandardFormLp& lp) {
  if (lp.rhs.size() != lp.rows || lp.cost.size() != lp.columns.size())
    fail(ErrorCode::InvalidArgument, "LP dimensions disagree");
  for (const auto& col : lp.columns)
    if (col.size() != lp.rows) fail(ErrorCode::InvalidArgument, "LP column has the wrong length");
  return RevisedSimplex(lp).run();
}

}  // namespace sumint
