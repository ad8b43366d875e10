#include "ckp/model.hpp"

#include <algorithm>
#include <numeric>

#include "ckp/error.hpp"
#include "greedy.hpp"

namespace ckp {
namespace {

const Rational kZero;

std::string Entry(char what, int group, int slot) {
  return std::string(1, what) + "_{" + std::to_string(group) + "," + std::to_string(slot) + "}";
}

void RequireVar(const Instance& instance, VarRef v) {
  if (!instance.contains(v)) {
    Fail(ErrorKind::kValidation, "variable " + v.ToString() + " is outside the instance");
  }
}

}  // namespace

std::string VarRef::ToString() const {
  return "x_{" + std::to_string(group) + "," + std::to_string(slot) + "}";
}

Instance::Instance(std::vector<Group> groups, Rational capacity)
    : groups_(std::move(groups)), capacity_(std::move(capacity)) {
  offsets_.reserve(groups_.size() + 1);
  offsets_.push_back(0);
  for (const Group& g : groups_) offsets_.push_back(offsets_.back() + g.weights.size());
}

Instance Instance::Create(std::vector<Group> groups, Rational capacity) {
  if (groups.empty()) Fail(ErrorKind::kValidation, "instance has no groups");
  if (capacity.sign() <= 0) {
    Fail(ErrorKind::kValidation, "capacity b = " + capacity.ToString() + " must be positive");
  }
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const Group& g = groups[i];
    const int gi = static_cast<int>(i) + 1;
    if (g.weights.empty()) {
      Fail(ErrorKind::kValidation, "group " + std::to_string(gi) + " is empty");
    }
    if (g.weights.size() != g.profits.size()) {
      Fail(ErrorKind::kValidation,
           "group " + std::to_string(gi) + " has different numbers of weights and profits");
    }
    for (std::size_t j = 0; j < g.weights.size(); ++j) {
      const int sj = static_cast<int>(j) + 1;
      if (g.weights[j].sign() < 0) {
        Fail(ErrorKind::kValidation,
             "negative weight " + Entry('a', gi, sj) + " = " + g.weights[j].ToString());
      }
      if (g.profits[j].sign() < 0) {
        Fail(ErrorKind::kValidation,
             "negative profit " + Entry('c', gi, sj) + " = " + g.profits[j].ToString());
      }
    }
  }
  return Instance(std::move(groups), std::move(capacity));
}

bool Instance::contains(VarRef v) const {
  return v.group >= 1 && v.group <= num_groups() && v.slot >= 1 && v.slot <= group_size(v.group);
}

VarRef Instance::var_at(std::size_t index) const {
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  const auto group = static_cast<int>(it - offsets_.begin());
  return VarRef{group, static_cast<int>(index - offsets_[group - 1]) + 1};
}

std::vector<VarRef> Instance::variables() const {
  std::vector<VarRef> out;
  out.reserve(dimension());
  for (int i = 1; i <= num_groups(); ++i) {
    for (int j = 1; j <= group_size(i); ++j) out.push_back({i, j});
  }
  return out;
}

bool Instance::is_normalized() const {
  for (const Group& g : groups_) {
    for (std::size_t j = 1; j < g.weights.size(); ++j) {
      if (g.weights[j - 1] < g.weights[j]) return false;
    }
  }
  return true;
}

const Rational& SparseVector::get(VarRef v) const {
  const auto it = entries_.find(v);
  return it == entries_.end() ? kZero : it->second;
}

void SparseVector::set(VarRef v, Rational value) {
  if (value.is_zero()) {
    entries_.erase(v);
  } else {
    entries_.insert_or_assign(v, std::move(value));
  }
}

Point Point::FromDense(const Instance& instance, std::span<const Rational> dense) {
  Point p;
  for (std::size_t k = 0; k < dense.size(); ++k) {
    if (!dense[k].is_zero()) p.values.set(instance.var_at(k), dense[k]);
  }
  return p;
}

std::vector<Rational> Point::ToDense(const Instance& instance) const {
  std::vector<Rational> dense(instance.dimension());
  for (const auto& [v, value] : values.entries()) {
    RequireVar(instance, v);
    dense[instance.index(v)] = value;
  }
  return dense;
}

LinearInequality KnapsackRow(const Instance& instance) {
  LinearInequality row;
  for (VarRef v : instance.variables()) row.coeffs.set(v, instance.weight(v));
  row.rhs = instance.capacity();
  return row;
}

Rational Dot(const Instance& instance, const SparseVector& coeffs, const Point& point) {
  for (const auto& [v, value] : point.values.entries()) RequireVar(instance, v);
  Rational total;
  for (const auto& [v, coeff] : coeffs.entries()) {
    RequireVar(instance, v);
    const Rational& x = point.values.get(v);
    if (!x.is_zero()) total += coeff * x;
  }
  return total;
}

Evaluation Evaluate(const Instance& instance, const LinearInequality& inequality,
                    const Point& point) {
  Evaluation e;
  e.lhs = Dot(instance, inequality.coeffs, point);
  e.violation = e.lhs - inequality.rhs;
  return e;
}

bool SatisfiesBounds(const Instance& instance, const Point& point) {
  for (const auto& [v, value] : point.values.entries()) {
    if (!instance.contains(v) || value.sign() < 0 || value > Rational(1)) return false;
  }
  return true;
}

bool SatisfiesKnapsack(const Instance& instance, const Point& point) {
  return Dot(instance, KnapsackRow(instance).coeffs, point) <= instance.capacity();
}

bool SatisfiesComplementarity(const Instance& instance, const Point& point) {
  std::vector<int> positives(static_cast<std::size_t>(instance.num_groups()), 0);
  for (const auto& [v, value] : point.values.entries()) {
    RequireVar(instance, v);
    if (value.sign() > 0 && ++positives[v.group - 1] > 1) return false;
  }
  return true;
}

bool Normalized::is_identity() const {
  for (const auto& perm : permutation) {
    for (std::size_t j = 0; j < perm.size(); ++j) {
      if (perm[j] != static_cast<int>(j) + 1) return false;
    }
  }
  return true;
}

Point Normalized::ToInput(const Point& normalized_point) const {
  Point out;
  for (const auto& [v, value] : normalized_point.values.entries()) {
    out.values.set({v.group, permutation[v.group - 1][v.slot - 1]}, value);
  }
  return out;
}

Normalized Normalize(const Instance& instance) {
  std::vector<Group> groups;
  std::vector<std::vector<int>> permutation;
  for (const Group& g : instance.groups()) {
    std::vector<int> perm(g.weights.size());
    std::iota(perm.begin(), perm.end(), 1);
    std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) {
      const Rational& ax = g.weights[x - 1];
      const Rational& ay = g.weights[y - 1];
      if (ax != ay) return ax > ay;
      return g.profits[x - 1] > g.profits[y - 1];
    });
    Group sorted;
    for (int j : perm) {
      sorted.weights.push_back(g.weights[j - 1]);
      sorted.profits.push_back(g.profits[j - 1]);
    }
    groups.push_back(std::move(sorted));
    permutation.push_back(std::move(perm));
  }
  return Normalized{Instance::Create(std::move(groups), instance.capacity()),
                    std::move(permutation)};
}

AssumptionReport ValidateAssumptions(const Instance& instance) {
  AssumptionReport report;
  Rational max_weight_sum;
  for (int i = 1; i <= instance.num_groups(); ++i) {
    if (instance.is_singleton(i)) report.m0.push_back(i);
    const auto& w = instance.group(i).weights;
    max_weight_sum += *std::max_element(w.begin(), w.end());
  }
  report.assumption1 = static_cast<int>(report.m0.size()) != instance.num_groups();
  report.assumption2 = max_weight_sum > instance.capacity();

  if (!report.assumption2) {
    TrivialOptimum t;
    for (int i = 1; i <= instance.num_groups(); ++i) {
      const auto& c = instance.group(i).profits;
      const auto best = std::max_element(c.begin(), c.end());  // first maximum
      const int slot = static_cast<int>(best - c.begin()) + 1;
      t.point.values.set({i, slot}, 1);
      t.value += *best;
    }
    report.trivial_optimum = std::move(t);
  } else if (!report.assumption1) {
    std::vector<Rational> profits(instance.dimension());
    for (std::size_t k = 0; k < profits.size(); ++k) profits[k] = instance.profit(instance.var_at(k));
    const auto order = internal::GreedyOrder(instance, profits);
    std::vector<Rational> x(instance.dimension());
    TrivialOptimum t;
    t.value = internal::GreedyFill(instance, profits, order, [](std::size_t) { return true; }, x);
    t.point = Point::FromDense(instance, x);
    report.trivial_optimum = std::move(t);
  }
  return report;
}

}  // namespace ckp
