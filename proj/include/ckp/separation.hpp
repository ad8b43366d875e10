#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ckp/cuts.hpp"

namespace ckp {

struct SeparationResult {
  std::optional<GeneratedCut> cut;
  Rational violation;  // evaluate(cut, point) - rhs, > 0 when a cut is found
  std::uint64_t candidates_examined = 0;
  std::chrono::nanoseconds elapsed{0};

  bool found() const { return cut.has_value(); }
};

// Exhaustive separation over every admissible member of the given families
// (item sets range over all one-slot-per-group patterns). Returns a maximum
// violation cut, ties broken by the smallest provenance. Requires a
// normalized instance and a point within bounds satisfying the knapsack row;
// throws kResource when the pattern count exceeds `limit`.
SeparationResult SeparateExact(const Instance& instance, const Point& point,
                               std::span<const CutFamily> families,
                               std::uint64_t limit = kDefaultEnumerationLimit);
SeparationResult SeparateExact(const Instance& instance, const Point& point, CutFamily family,
                               std::uint64_t limit = kDefaultEnumerationLimit);

// Single-pass heuristic for the pack families. Groups are ranked by
// sum_j a_ij x_ij (descending, ties by index) and their last-slot items are
// added first-fit while the pack weight stays below b. Cuts are generated
// from that pack and from each copy with one singleton item dropped; only
// families listed in `families` are produced.
SeparationResult SeparateGreedy(const Instance& instance, const Point& point,
                                std::span<const CutFamily> families = kAllFamilies);

struct PartitionInput {
  std::vector<std::int64_t> alphas;
  std::int64_t beta = 0;
};

struct PartitionReduction {
  Instance instance;
  Point point;
};

// Partition (alpha; beta) -> separation instance: k singleton groups with
// a = alpha, one group (3, 1, ..., 1) of size beta + 1, b = beta + 2, c = a;
// x* = (2 beta - 3)/(6 beta) on singletons, 1 on the weight-3 slot and 1/3
// on the unit slots. Requires sum(alpha) = 2 beta, alpha > 0, beta >= 2.
PartitionReduction BuildPartitionReduction(const PartitionInput& input);

}  // namespace ckp
