#include "ckp/oracle.hpp"

#include <limits>
#include <string>

#include "ckp/error.hpp"
#include "ckp/io.hpp"
#include "ckp/linalg.hpp"
#include "greedy.hpp"

namespace ckp {
namespace {

std::vector<Rational> DenseCoefficients(const Instance& instance, const SparseVector& coeffs) {
  std::vector<Rational> dense(instance.dimension());
  for (const auto& [v, value] : coeffs.entries()) {
    if (!instance.contains(v)) {
      Fail(ErrorKind::kValidation, "variable " + v.ToString() + " is outside the instance");
    }
    dense[instance.index(v)] = value;
  }
  return dense;
}

Rational DenseDot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational total;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!a[k].is_zero() && !b[k].is_zero()) total += a[k] * b[k];
  }
  return total;
}

}  // namespace

std::uint64_t PatternCount(const Instance& instance) {
  std::uint64_t count = 1;
  for (int i = 1; i <= instance.num_groups(); ++i) {
    const auto factor = static_cast<std::uint64_t>(instance.group_size(i)) + 1;
    if (count > std::numeric_limits<std::uint64_t>::max() / factor) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= factor;
  }
  return count;
}

void RequirePatternBudget(const Instance& instance, std::uint64_t limit) {
  const std::uint64_t count = PatternCount(instance);
  if (count > limit) {
    Fail(ErrorKind::kResource, "support pattern count " + std::to_string(count) +
                                   " exceeds enumeration limit " + std::to_string(limit));
  }
}

Oracle::Oracle(Instance instance, std::uint64_t limit)
    : instance_(std::move(instance)), limit_(limit) {
  RequirePatternBudget(instance_, limit_);
}

const std::vector<std::vector<Rational>>& Oracle::candidate_vertices() {
  if (vertices_) return *vertices_;
  const Instance& inst = instance_;
  const Rational& b = inst.capacity();
  std::vector<std::vector<Rational>> out;
  std::vector<std::size_t> chosen;
  ForEachPattern(inst, [&](const SupportPattern& choice) {
    chosen.clear();
    Rational total;
    for (int i = 1; i <= inst.num_groups(); ++i) {
      if (choice[i - 1] == 0) continue;
      const VarRef v{i, choice[i - 1]};
      chosen.push_back(inst.index(v));
      total += inst.weight(v);
    }
    if (total <= b) {
      std::vector<Rational> x(inst.dimension());
      for (std::size_t k : chosen) x[k] = 1;
      out.push_back(std::move(x));
      return;  // every designated-fractional value would be >= 1
    }
    for (std::size_t f : chosen) {
      const Rational& af = inst.weight(inst.var_at(f));
      if (af.is_zero()) continue;
      Rational value = (b - (total - af)) / af;
      if (value.sign() <= 0 || value >= Rational(1)) continue;
      std::vector<Rational> x(inst.dimension());
      for (std::size_t k : chosen) x[k] = 1;
      x[f] = std::move(value);
      out.push_back(std::move(x));
    }
  });
  vertices_ = std::move(out);
  return *vertices_;
}

std::vector<Point> Oracle::CandidateVertexPoints() {
  std::vector<Point> points;
  for (const auto& x : candidate_vertices()) points.push_back(Point::FromDense(instance_, x));
  return points;
}

MaximizeResult Oracle::Maximize(const SparseVector& objective) const {
  const Instance& inst = instance_;
  const auto obj = DenseCoefficients(inst, objective);
  const auto order = internal::GreedyOrder(inst, obj);

  std::vector<int> group_of(inst.dimension());
  std::vector<int> slot_of(inst.dimension());
  for (std::size_t k = 0; k < inst.dimension(); ++k) {
    const VarRef v = inst.var_at(k);
    group_of[k] = v.group;
    slot_of[k] = v.slot;
  }

  std::optional<Rational> best_value;
  std::vector<Rational> best_point;
  std::vector<Rational> x(inst.dimension());
  ForEachPattern(inst, [&](const SupportPattern& choice) {
    std::fill(x.begin(), x.end(), Rational());
    const Rational value = internal::GreedyFill(
        inst, obj, order, [&](std::size_t k) { return choice[group_of[k] - 1] == slot_of[k]; },
        x);
    // Patterns arrive in lexicographic order; the first maximizer wins.
    if (!best_value || value > *best_value) {
      best_value = value;
      best_point = x;
    }
  });
  return MaximizeResult{*best_value, Point::FromDense(inst, best_point)};
}

ValidityResult Oracle::CheckValidity(const LinearInequality& inequality) const {
  MaximizeResult best = Maximize(inequality.coeffs);
  ValidityResult r;
  r.valid = best.value <= inequality.rhs;
  r.max_lhs = best.value;
  if (!r.valid) r.counterexample = std::move(best.argmax);
  return r;
}

long Oracle::FaceDimension(const LinearInequality& inequality) {
  const ValidityResult validity = CheckValidity(inequality);
  if (!validity.valid) {
    Fail(ErrorKind::kInvalidCut, "inequality is not valid; witness:\n" +
                                     SerializePointValues(*validity.counterexample));
  }
  const auto coeffs = DenseCoefficients(instance_, inequality.coeffs);
  AffineHullBuilder hull(instance_.dimension());
  const long full = static_cast<long>(instance_.dimension());
  for (const auto& x : candidate_vertices()) {
    if (DenseDot(coeffs, x) != inequality.rhs) continue;
    hull.Add(x);
    if (hull.dimension() == full) break;
  }
  return hull.dimension();
}

std::vector<Point> EnumerateCandidateVertices(const Instance& instance, std::uint64_t limit) {
  return Oracle(instance, limit).CandidateVertexPoints();
}

MaximizeResult MaximizeOverS(const Instance& instance, const SparseVector& objective,
                             std::uint64_t limit) {
  return Oracle(instance, limit).Maximize(objective);
}

ValidityResult CheckValidity(const Instance& instance, const LinearInequality& inequality,
                             std::uint64_t limit) {
  return Oracle(instance, limit).CheckValidity(inequality);
}

long FaceDimension(const Instance& instance, const LinearInequality& inequality,
                   std::uint64_t limit) {
  return Oracle(instance, limit).FaceDimension(inequality);
}

}  // namespace ckp
