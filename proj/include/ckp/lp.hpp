#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "ckp/linalg.hpp"
#include "ckp/model.hpp"

namespace ckp {

// max objective.x  s.t.  rows.x <= rhs,  0 <= x <= 1,  x_j = 0 for forced j.
struct LpProblem {
  std::size_t num_vars = 0;
  std::vector<Vector> rows;
  Vector rhs;
  Vector objective;
  std::vector<bool> forced_zero;

  // Knapsack row first, then `cuts` in order. Objective defaults to profits.
  static LpProblem ForInstance(const Instance& instance, std::span<const LinearInequality> cuts,
                               const std::set<VarRef>& forced_zero = {});
  static LpProblem ForInstance(const Instance& instance, std::span<const LinearInequality> cuts,
                               const SparseVector& objective,
                               const std::set<VarRef>& forced_zero = {});
};

enum class LpStatus { kOptimal, kInfeasible };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  Vector x;
  // Optimality certificate: y >= 0 on rows, w >= 0 on the upper bounds of
  // free variables, with rows^T y + w >= objective on free columns and
  // rhs.y + sum(w) = value.
  Vector row_duals;
  Vector bound_duals;
  std::uint64_t pivots = 0;
};

// Dense two-phase rational simplex with Bland's rule.
LpSolution SolveLp(const LpProblem& problem);

// Checks the dual certificate and primal feasibility exactly.
bool VerifyLpCertificate(const LpProblem& problem, const LpSolution& solution);

}  // namespace ckp
