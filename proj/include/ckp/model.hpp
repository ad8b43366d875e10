#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ckp/rational.hpp"

namespace ckp {

// Variable x_{group,slot}; both indices are 1-based.
struct VarRef {
  int group = 0;
  int slot = 0;

  friend auto operator<=>(const VarRef&, const VarRef&) = default;
  std::string ToString() const;
};

// One SOS1 set: at most one of its variables may be positive.
struct Group {
  std::vector<Rational> weights;
  std::vector<Rational> profits;

  int size() const { return static_cast<int>(weights.size()); }
  friend bool operator==(const Group&, const Group&) = default;
};

// Complementarity knapsack instance. Immutable once built; Create() enforces
//   m >= 1, b > 0, n_i >= 1, |a_i| = |c_i|, a >= 0, c >= 0.
class Instance {
 public:
  static Instance Create(std::vector<Group> groups, Rational capacity);

  int num_groups() const { return static_cast<int>(groups_.size()); }
  int group_size(int group) const { return groups_[group - 1].size(); }
  // d, the total number of variables.
  std::size_t dimension() const { return offsets_.back(); }

  const std::vector<Group>& groups() const { return groups_; }
  const Group& group(int group) const { return groups_[group - 1]; }
  const Rational& capacity() const { return capacity_; }
  const Rational& weight(VarRef v) const { return groups_[v.group - 1].weights[v.slot - 1]; }
  const Rational& profit(VarRef v) const { return groups_[v.group - 1].profits[v.slot - 1]; }
  // Weight of the last slot, a_{i,n_i}.
  const Rational& last_weight(int group) const { return groups_[group - 1].weights.back(); }

  bool contains(VarRef v) const;
  // Dense position of v in 0..d-1, groups in order then slots in order.
  std::size_t index(VarRef v) const { return offsets_[v.group - 1] + v.slot - 1; }
  VarRef var_at(std::size_t index) const;
  std::vector<VarRef> variables() const;

  // True when M_0 contains the group (n_i = 1).
  bool is_singleton(int group) const { return group_size(group) == 1; }
  // Assumption 4: weights within each group are non-increasing.
  bool is_normalized() const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.capacity_ == b.capacity_ && a.groups_ == b.groups_;
  }

 private:
  Instance(std::vector<Group> groups, Rational capacity);

  std::vector<Group> groups_;
  Rational capacity_;
  std::vector<std::size_t> offsets_;
};

// Sparse map VarRef -> value with zero entries omitted.
class SparseVector {
 public:
  using Map = std::map<VarRef, Rational>;

  const Rational& get(VarRef v) const;
  // Stores value; a zero value erases the entry.
  void set(VarRef v, Rational value);
  void add(VarRef v, const Rational& delta) { set(v, get(v) + delta); }

  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  Map entries_;
};

// sum coeffs[v] * x_v <= rhs
struct LinearInequality {
  SparseVector coeffs;
  Rational rhs;

  friend bool operator==(const LinearInequality&, const LinearInequality&) = default;
};

// A point x; every stored value lies in [0, 1].
struct Point {
  SparseVector values;

  static Point FromDense(const Instance& instance, std::span<const Rational> dense);
  std::vector<Rational> ToDense(const Instance& instance) const;

  friend bool operator==(const Point&, const Point&) = default;
};

LinearInequality KnapsackRow(const Instance& instance);

struct Evaluation {
  Rational lhs;
  Rational violation;  // lhs - rhs
};

// Exact sparse dot product. Throws kValidation if a VarRef in either argument
// is outside the instance.
Evaluation Evaluate(const Instance& instance, const LinearInequality& inequality,
                    const Point& point);
Rational Dot(const Instance& instance, const SparseVector& coeffs, const Point& point);

// Checks bounds, the knapsack row and (optionally) complementarity exactly.
bool SatisfiesBounds(const Instance& instance, const Point& point);
bool SatisfiesKnapsack(const Instance& instance, const Point& point);
bool SatisfiesComplementarity(const Instance& instance, const Point& point);
inline bool IsFeasible(const Instance& instance, const Point& point) {
  return SatisfiesBounds(instance, point) && SatisfiesKnapsack(instance, point) &&
         SatisfiesComplementarity(instance, point);
}

struct Normalized {
  Instance instance;
  // permutation[i-1][j-1] = input slot of normalized slot j in group i.
  std::vector<std::vector<int>> permutation;

  bool is_identity() const;
  // Maps a point over the normalized instance back to input slot indices.
  Point ToInput(const Point& normalized_point) const;
};

// Sorts each group by non-increasing weight; ties by non-increasing profit,
// then by input slot order.
Normalized Normalize(const Instance& instance);

struct TrivialOptimum {
  Rational value;
  Point point;
};

struct AssumptionReport {
  std::vector<int> m0;  // groups with n_i = 1, ascending
  bool assumption1 = false;  // M != M_0
  bool assumption2 = false;  // sum_i max_j a_ij > b
  std::optional<TrivialOptimum> trivial_optimum;
};

// Evaluates Assumptions 1 and 2. When Assumption 2 fails every group's best
// profit slot fits at value 1 simultaneously; when only Assumption 1 fails the
// problem is a plain continuous knapsack solved by the ratio greedy. Either
// way the optimum is recorded in trivial_optimum.
AssumptionReport ValidateAssumptions(const Instance& instance);

}  // namespace ckp
