#include "ckp/solver.hpp"

#include <queue>
#include <unordered_set>

#include "ckp/error.hpp"
#include "ckp/io.hpp"
#include "ckp/separation.hpp"

namespace ckp {
namespace {

struct Node {
  std::set<VarRef> forced_zero;
  std::optional<Rational> parent_bound;
  std::uint64_t sequence = 0;
};

struct NodeOrder {
  // priority_queue pops the "largest": highest bound, then lowest sequence.
  bool operator()(const Node& x, const Node& y) const {
    if (x.parent_bound.has_value() != y.parent_bound.has_value()) return y.parent_bound.has_value() == false;
    if (x.parent_bound && *x.parent_bound != *y.parent_bound) return *x.parent_bound < *y.parent_bound;
    return x.sequence > y.sequence;
  }
};

// Group with >= 2 positive variables maximizing sum_j x_ij (ties: smallest i).
std::optional<int> BranchingGroup(const Instance& instance, const Point& x) {
  std::optional<int> best;
  Rational best_mass;
  for (int i = 1; i <= instance.num_groups(); ++i) {
    int positives = 0;
    Rational mass;
    for (int j = 1; j <= instance.group_size(i); ++j) {
      const Rational& v = x.values.get({i, j});
      if (v.sign() > 0) {
        ++positives;
        mass += v;
      }
    }
    if (positives >= 2 && (!best || mass > best_mass)) {
      best = i;
      best_mass = std::move(mass);
    }
  }
  return best;
}

}  // namespace

SolveReport BranchAndCut(const Instance& instance, const SolverConfig& config) {
  if (!instance.is_normalized()) {
    Fail(ErrorKind::kPrecondition, "branch-and-cut requires a normalized instance");
  }
  SolveReport report;
  const AssumptionReport assumptions = ValidateAssumptions(instance);
  if (assumptions.trivial_optimum) {
    report.optimal = true;
    report.trivial = true;
    report.value = assumptions.trivial_optimum->value;
    report.point = assumptions.trivial_optimum->point;
    report.best_bound = report.value;
    return report;
  }

  // x = 0 is always feasible.
  report.value = 0;
  std::vector<LinearInequality> pool;
  std::unordered_set<std::string> pool_keys;

  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  std::uint64_t sequence = 0;
  open.push(Node{{}, std::nullopt, sequence++});

  while (!open.empty()) {
    if (report.nodes >= config.node_limit) break;
    Node node = open.top();
    open.pop();
    if (node.parent_bound && *node.parent_bound <= report.value) continue;
    ++report.nodes;

    NodeRecord record{node.parent_bound, std::nullopt};
    int cuts_here = 0;
    std::optional<Rational> bound;
    std::optional<Point> fractional;
    for (;;) {
      const LpProblem lp = LpProblem::ForInstance(instance, pool, node.forced_zero);
      const LpSolution sol = SolveLp(lp);
      report.lp_pivots += sol.pivots;
      if (sol.status == LpStatus::kInfeasible) {
        bound.reset();
        break;
      }
      if (config.verify_certificates && !VerifyLpCertificate(lp, sol)) {
        Fail(ErrorKind::kValidation, "LP dual certificate check failed");
      }
      bound = sol.value;
      const Point x = Point::FromDense(instance, sol.x);
      if (sol.value <= report.value) break;
      if (SatisfiesComplementarity(instance, x)) {
        report.value = sol.value;
        report.point = x;
        break;
      }
      fractional = x;
      if (cuts_here >= config.max_cuts_per_node || config.families.empty()) break;

      SeparationResult sep = SeparateGreedy(instance, x, config.families);
      if (!sep.found() && config.separation == SeparationMode::kGreedyThenExact) {
        try {
          sep = SeparateExact(instance, x, config.families, config.enumeration_limit);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::kResource) throw;
        }
      }
      if (!sep.found()) break;
      std::string key = SerializeInequality(sep.cut->inequality);
      if (!pool_keys.insert(std::move(key)).second) break;
      pool.push_back(sep.cut->inequality);
      ++report.cuts_per_family[sep.cut->family];
      report.cuts.push_back(std::move(*sep.cut));
      ++cuts_here;
      fractional.reset();
    }
    record.lp_bound = bound;
    if (config.record_nodes) report.node_log.push_back(record);

    if (!bound || *bound <= report.value || !fractional) continue;
    const auto group = BranchingGroup(instance, *fractional);
    if (!group) continue;  // unreachable: complementarity-infeasible points have one
    int split = 0;
    for (int j = 1; j <= instance.group_size(*group); ++j) {
      if (fractional->values.get({*group, j}).sign() > 0) {
        split = j;
        break;
      }
    }
    Node low{node.forced_zero, bound, sequence++};
    Node high{node.forced_zero, bound, sequence++};
    for (int j = 1; j <= instance.group_size(*group); ++j) {
      (j <= split ? low : high).forced_zero.insert({*group, j});
    }
    open.push(std::move(low));
    open.push(std::move(high));
  }

  // Open nodes carry their parent's LP bound; the root carries none.
  report.optimal = true;
  report.best_bound = report.value;
  for (; !open.empty(); open.pop()) {
    const Node& n = open.top();
    if (!n.parent_bound) {
      report.optimal = false;
      continue;
    }
    if (*n.parent_bound > report.best_bound) {
      report.best_bound = *n.parent_bound;
      report.optimal = false;
    }
  }
  return report;
}

}  // namespace ckp
