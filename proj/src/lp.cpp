#include "ckp/lp.hpp"

#include <optional>

#include "ckp/error.hpp"

namespace ckp {
namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : a_(rows, Vector(cols)), b_(rows), basis_(rows), d_(cols) {}

  Vector& row(std::size_t r) { return a_[r]; }
  Rational& rhs(std::size_t r) { return b_[r]; }
  Vector& reduced() { return d_; }
  Rational& value() { return z_; }
  std::size_t& basis(std::size_t r) { return basis_[r]; }
  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return d_.size(); }
  std::uint64_t pivots() const { return pivots_; }

  void Pivot(std::size_t r, std::size_t e) {
    ++pivots_;
    Vector& pr = a_[r];
    const Rational inv = Rational(1) / pr[e];
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c < pr.size(); ++c) {
      if (pr[c].is_zero()) continue;
      pr[c] *= inv;
      nz.push_back(c);
    }
    b_[r] *= inv;
    auto eliminate = [&](Vector& target, Rational& target_rhs) {
      if (target[e].is_zero()) return;
      const Rational factor = target[e];
      for (std::size_t c : nz) target[c] -= factor * pr[c];
      if (!b_[r].is_zero()) target_rhs -= factor * b_[r];
    };
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i != r) eliminate(a_[i], b_[i]);
    }
    eliminate(d_, z_);
    basis_[r] = e;
  }

  // Bland's rule. Returns false if unbounded.
  bool Optimize(const std::vector<bool>& banned) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t c = 0; c < d_.size(); ++c) {
        if (!banned[c] && d_[c].sign() < 0) {
          enter = c;
          break;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < a_.size(); ++r) {
        const Rational& t = a_[r][*enter];
        if (t.sign() <= 0) continue;
        Rational ratio = b_[r] / t;
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (!leave) return false;
      Pivot(*leave, *enter);
    }
  }

 private:
  std::vector<Vector> a_;
  Vector b_;
  std::vector<std::size_t> basis_;
  Vector d_;  // z_j - c_j
  Rational z_;
  std::uint64_t pivots_ = 0;
};

}  // namespace

LpProblem LpProblem::ForInstance(const Instance& instance, std::span<const LinearInequality> cuts,
                                 const std::set<VarRef>& forced_zero) {
  SparseVector profits;
  for (VarRef v : instance.variables()) profits.set(v, instance.profit(v));
  return ForInstance(instance, cuts, profits, forced_zero);
}

LpProblem LpProblem::ForInstance(const Instance& instance, std::span<const LinearInequality> cuts,
                                 const SparseVector& objective,
                                 const std::set<VarRef>& forced_zero) {
  LpProblem p;
  p.num_vars = instance.dimension();
  auto dense = [&](const SparseVector& s) {
    Vector out(p.num_vars);
    for (const auto& [v, value] : s.entries()) {
      if (!instance.contains(v)) {
        Fail(ErrorKind::kValidation, "variable " + v.ToString() + " is outside the instance");
      }
      out[instance.index(v)] = value;
    }
    return out;
  };
  const LinearInequality knapsack = KnapsackRow(instance);
  p.rows.push_back(dense(knapsack.coeffs));
  p.rhs.push_back(knapsack.rhs);
  for (const LinearInequality& cut : cuts) {
    p.rows.push_back(dense(cut.coeffs));
    p.rhs.push_back(cut.rhs);
  }
  p.objective = dense(objective);
  p.forced_zero.assign(p.num_vars, false);
  for (const VarRef& v : forced_zero) p.forced_zero[instance.index(v)] = true;
  return p;
}

LpSolution SolveLp(const LpProblem& problem) {
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < problem.num_vars; ++j) {
    if (problem.forced_zero.empty() || !problem.forced_zero[j]) free_cols.push_back(j);
  }
  const std::size_t nf = free_cols.size();
  const std::size_t nrows = problem.rows.size();
  const std::size_t m = nrows + nf;

  bool needs_phase1 = false;
  for (const Rational& r : problem.rhs) needs_phase1 = needs_phase1 || r.sign() < 0;

  // Columns: free structurals, one slack per row, then the phase-1 artificial.
  const std::size_t aux = nf + m;
  Tableau t(m, nf + m + (needs_phase1 ? 1 : 0));
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t c = 0; c < nf; ++c) t.row(i)[c] = problem.rows[i][free_cols[c]];
    t.rhs(i) = problem.rhs[i];
  }
  for (std::size_t c = 0; c < nf; ++c) {
    t.row(nrows + c)[c] = 1;
    t.rhs(nrows + c) = 1;
  }
  for (std::size_t r = 0; r < m; ++r) {
    t.row(r)[nf + r] = 1;
    t.basis(r) = nf + r;
  }

  std::vector<bool> banned(t.cols(), false);
  LpSolution sol;

  if (needs_phase1) {
    std::size_t worst = 0;
    for (std::size_t r = 0; r < m; ++r) {
      t.row(r)[aux] = -1;
      if (t.rhs(r) < t.rhs(worst)) worst = r;
    }
    t.reduced()[aux] = 1;  // maximize -x_aux
    t.Pivot(worst, aux);
    if (!t.Optimize(banned)) Fail(ErrorKind::kValidation, "phase 1 unbounded");
    if (t.value().sign() < 0) {
      sol.status = LpStatus::kInfeasible;
      sol.pivots = t.pivots();
      return sol;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (t.basis(r) != aux) continue;
      for (std::size_t c = 0; c < aux; ++c) {
        if (!t.row(r)[c].is_zero()) {
          t.Pivot(r, c);
          break;
        }
      }
    }
    banned[aux] = true;
    std::fill(t.reduced().begin(), t.reduced().end(), Rational());
    t.value() = 0;
  }

  for (std::size_t c = 0; c < nf; ++c) t.reduced()[c] = -problem.objective[free_cols[c]];
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t k = t.basis(r);
    if (t.reduced()[k].is_zero()) continue;
    const Rational factor = t.reduced()[k];
    for (std::size_t c = 0; c < t.cols(); ++c) {
      if (!t.row(r)[c].is_zero()) t.reduced()[c] -= factor * t.row(r)[c];
    }
    t.value() -= factor * t.rhs(r);
  }
  if (!t.Optimize(banned)) Fail(ErrorKind::kValidation, "LP unbounded despite x <= 1");

  sol.status = LpStatus::kOptimal;
  sol.value = t.value();
  sol.x.assign(problem.num_vars, Rational());
  for (std::size_t r = 0; r < m; ++r) {
    if (t.basis(r) < nf) sol.x[free_cols[t.basis(r)]] = t.rhs(r);
  }
  sol.row_duals.assign(nrows, Rational());
  for (std::size_t i = 0; i < nrows; ++i) sol.row_duals[i] = t.reduced()[nf + i];
  sol.bound_duals.assign(problem.num_vars, Rational());
  for (std::size_t c = 0; c < nf; ++c) sol.bound_duals[free_cols[c]] = t.reduced()[nf + nrows + c];
  sol.pivots = t.pivots();
  return sol;
}

bool VerifyLpCertificate(const LpProblem& problem, const LpSolution& solution) {
  if (solution.status != LpStatus::kOptimal) return false;
  auto forced = [&](std::size_t j) {
    return !problem.forced_zero.empty() && problem.forced_zero[j];
  };
  Rational primal;
  for (std::size_t j = 0; j < problem.num_vars; ++j) {
    const Rational& x = solution.x[j];
    if (x.sign() < 0 || x > Rational(1) || (forced(j) && !x.is_zero())) return false;
    primal += problem.objective[j] * x;
  }
  if (primal != solution.value) return false;
  for (std::size_t i = 0; i < problem.rows.size(); ++i) {
    Rational lhs;
    for (std::size_t j = 0; j < problem.num_vars; ++j) lhs += problem.rows[i][j] * solution.x[j];
    if (lhs > problem.rhs[i]) return false;
  }

  Rational dual;
  for (std::size_t i = 0; i < problem.rows.size(); ++i) {
    if (solution.row_duals[i].sign() < 0) return false;
    dual += solution.row_duals[i] * problem.rhs[i];
  }
  for (std::size_t j = 0; j < problem.num_vars; ++j) {
    if (forced(j)) continue;
    const Rational& w = solution.bound_duals[j];
    if (w.sign() < 0) return false;
    dual += w;
    Rational reduced = w;
    for (std::size_t i = 0; i < problem.rows.size(); ++i) {
      reduced += solution.row_duals[i] * problem.rows[i][j];
    }
    if (reduced < problem.objective[j]) return false;
  }
  return dual == solution.value;
}

}  // namespace ckp
