#include "ckp/separation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ckp/error.hpp"

namespace ckp {
namespace {

void RequireLpFeasible(const Instance& instance, const Point& point) {
  if (!instance.is_normalized()) {
    Fail(ErrorKind::kPrecondition, "separation requires a normalized instance");
  }
  if (!SatisfiesBounds(instance, point)) {
    Fail(ErrorKind::kPrecondition, "point violates the bounds 0 <= x <= 1");
  }
  if (!SatisfiesKnapsack(instance, point)) {
    Fail(ErrorKind::kPrecondition, "point violates the knapsack row");
  }
}

// Keeps the maximum-violation cut, ties to the smaller provenance.
class BestCut {
 public:
  BestCut(const Instance& instance, const Point& point) : instance_(instance), point_(point) {}

  void Offer(GeneratedCut cut) {
    ++examined_;
    Rational violation = Evaluate(instance_, cut.inequality, point_).violation;
    if (violation.sign() <= 0) return;
    if (best_ && (violation < result_.violation ||
                  (violation == result_.violation &&
                   !(cut.provenance < best_->provenance)))) {
      return;
    }
    result_.violation = std::move(violation);
    best_ = std::move(cut);
  }

  SeparationResult Finish(std::chrono::steady_clock::time_point start) {
    result_.cut = std::move(best_);
    result_.candidates_examined = examined_;
    result_.elapsed = std::chrono::steady_clock::now() - start;
    return std::move(result_);
  }

 private:
  const Instance& instance_;
  const Point& point_;
  std::optional<GeneratedCut> best_;
  SeparationResult result_;
  std::uint64_t examined_ = 0;
};

}  // namespace

SeparationResult SeparateExact(const Instance& instance, const Point& point,
                               std::span<const CutFamily> families, std::uint64_t limit) {
  const auto start = std::chrono::steady_clock::now();
  RequireLpFeasible(instance, point);
  RequirePatternBudget(instance, limit);

  BestCut best(instance, point);
  ForEachPattern(instance, [&](const SupportPattern& choice) {
    std::vector<VarRef> items;
    for (int i = 1; i <= instance.num_groups(); ++i) {
      if (choice[i - 1] != 0) items.push_back({i, choice[i - 1]});
    }
    if (items.empty()) return;
    const ItemSet set = ItemSet::Create(instance, std::move(items));
    for (CutFamily family : families) {
      for (GeneratedCut& cut : CutsFromItemSet(instance, set, family)) best.Offer(std::move(cut));
    }
  });
  return best.Finish(start);
}

SeparationResult SeparateExact(const Instance& instance, const Point& point, CutFamily family,
                               std::uint64_t limit) {
  return SeparateExact(instance, point, std::span<const CutFamily>(&family, 1), limit);
}

SeparationResult SeparateGreedy(const Instance& instance, const Point& point,
                                std::span<const CutFamily> families) {
  const auto start = std::chrono::steady_clock::now();
  RequireLpFeasible(instance, point);

  const int m = instance.num_groups();
  std::vector<Rational> load(static_cast<std::size_t>(m));
  for (const auto& [v, value] : point.values.entries()) {
    load[v.group - 1] += instance.weight(v) * value;
  }
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return load[x - 1] > load[y - 1]; });

  std::vector<VarRef> items;
  Rational weight;
  for (int i : order) {
    const Rational& a = instance.last_weight(i);
    if (weight + a < instance.capacity()) {
      items.push_back({i, instance.group_size(i)});
      weight += a;
    }
  }

  BestCut best(instance, point);
  if (!items.empty()) {
    const ItemSet pack = ItemSet::Create(instance, std::move(items));
    std::vector<ItemSet> packs{pack};
    for (const VarRef& v : pack.items()) {
      if (instance.is_singleton(v.group) && pack.size() > 1) {
        packs.push_back(pack.Without(instance, v.group));
      }
    }
    for (const ItemSet& p : packs) {
      for (CutFamily family : families) {
        if (family == CutFamily::kLiftedCover1 || family == CutFamily::kLiftedCover2) continue;
        for (GeneratedCut& cut : CutsFromItemSet(instance, p, family)) best.Offer(std::move(cut));
      }
    }
  }
  return best.Finish(start);
}

PartitionReduction BuildPartitionReduction(const PartitionInput& input) {
  if (input.alphas.empty()) Fail(ErrorKind::kPrecondition, "partition input has no alphas");
  std::int64_t sum = 0;
  for (std::int64_t alpha : input.alphas) {
    if (alpha <= 0) Fail(ErrorKind::kPrecondition, "alphas must be positive integers");
    sum += alpha;
  }
  if (input.beta < 2) {
    Fail(ErrorKind::kPrecondition, "beta must be at least 2 (x* would be negative)");
  }
  if (sum != 2 * input.beta) {
    Fail(ErrorKind::kPrecondition, "sum of alphas " + std::to_string(sum) +
                                       " differs from 2*beta = " + std::to_string(2 * input.beta));
  }

  const std::int64_t beta = input.beta;
  std::vector<Group> groups;
  for (std::int64_t alpha : input.alphas) groups.push_back({{Rational(alpha)}, {Rational(alpha)}});
  Group last;
  last.weights.push_back(3);
  for (std::int64_t j = 0; j < beta; ++j) last.weights.push_back(1);
  last.profits = last.weights;
  groups.push_back(std::move(last));

  PartitionReduction out{Instance::Create(std::move(groups), Rational(beta + 2)), {}};
  const Rational singleton_value(2 * beta - 3, 6 * beta);
  const int k = static_cast<int>(input.alphas.size());
  for (int i = 1; i <= k; ++i) out.point.values.set({i, 1}, singleton_value);
  out.point.values.set({k + 1, 1}, 1);
  for (int j = 2; j <= beta + 1; ++j) out.point.values.set({k + 1, j}, Rational(1, 3));
  return out;
}

}  // namespace ckp
