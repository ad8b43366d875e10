#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ckp/model.hpp"

namespace ckp {

inline constexpr std::uint64_t kDefaultEnumerationLimit = 1'000'000;

// prod_i (n_i + 1), saturating at UINT64_MAX.
std::uint64_t PatternCount(const Instance& instance);
// Throws Error(kResource) when PatternCount exceeds `limit`.
void RequirePatternBudget(const Instance& instance, std::uint64_t limit);

// Which slot (0 = none) each group may have positive. Choice vectors compare
// lexicographically, group 1 most significant.
using SupportPattern = std::vector<int>;

// Visits every SupportPattern in lexicographic order.
template <typename Visit>
void ForEachPattern(const Instance& instance, Visit visit) {
  SupportPattern choice(static_cast<std::size_t>(instance.num_groups()), 0);
  for (;;) {
    visit(static_cast<const SupportPattern&>(choice));
    int i = instance.num_groups();
    while (i >= 1 && choice[i - 1] == instance.group_size(i)) {
      choice[i - 1] = 0;
      --i;
    }
    if (i == 0) return;
    ++choice[i - 1];
  }
}

struct MaximizeResult {
  Rational value;
  Point argmax;
};

struct ValidityResult {
  bool valid = false;
  Rational max_lhs;                 // max of the inequality's LHS over S
  std::optional<Point> counterexample;
};

// Ground truth over S = {x in [0,1]^d : a.x <= b, complementarity}. Candidate
// vertices are computed lazily and cached; each pattern contributes its
// all-ones point (if it fits) and, per chosen variable, the point with that
// variable fractional and the knapsack tight.
class Oracle {
 public:
  explicit Oracle(Instance instance, std::uint64_t limit = kDefaultEnumerationLimit);

  const Instance& instance() const { return instance_; }

  const std::vector<std::vector<Rational>>& candidate_vertices();
  std::vector<Point> CandidateVertexPoints();

  // Exact max of a linear objective over S, by per-pattern fractional greedy.
  // Ties: lexicographically smallest pattern, then lexicographically largest
  // point.
  MaximizeResult Maximize(const SparseVector& objective) const;
  ValidityResult CheckValidity(const LinearInequality& inequality) const;
  // Dimension of {x in PS : inequality tight}; -1 for an empty face. Throws
  // Error(kInvalidCut) carrying the witness when the inequality is not valid.
  long FaceDimension(const LinearInequality& inequality);
  bool IsFacet(const LinearInequality& inequality) {
    return FaceDimension(inequality) == static_cast<long>(instance_.dimension()) - 1;
  }

 private:
  Instance instance_;
  std::uint64_t limit_;
  std::optional<std::vector<std::vector<Rational>>> vertices_;
};

// Free-function forms of the oracle operations.
std::vector<Point> EnumerateCandidateVertices(const Instance& instance,
                                              std::uint64_t limit = kDefaultEnumerationLimit);
MaximizeResult MaximizeOverS(const Instance& instance, const SparseVector& objective,
                             std::uint64_t limit = kDefaultEnumerationLimit);
ValidityResult CheckValidity(const Instance& instance, const LinearInequality& inequality,
                             std::uint64_t limit = kDefaultEnumerationLimit);
long FaceDimension(const Instance& instance, const LinearInequality& inequality,
                   std::uint64_t limit = kDefaultEnumerationLimit);

}  // namespace ckp
