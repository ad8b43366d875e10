#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "ckp/model.hpp"

namespace ckp::internal {

// Order used by the fractional knapsack greedy: positive-objective weight-0
// items first, then objective/weight descending, ties by VarRef.
inline std::vector<std::size_t> GreedyOrder(const Instance& instance,
                                            std::span<const Rational> objective) {
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < objective.size(); ++k) {
    if (objective[k].sign() > 0) order.push_back(k);
  }
  auto weight = [&](std::size_t k) -> const Rational& {
    return instance.weight(instance.var_at(k));
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const bool zx = weight(x).is_zero();
    const bool zy = weight(y).is_zero();
    if (zx != zy) return zx;
    if (zx) return false;
    // c_x / a_x > c_y / a_y  <=>  c_x * a_y > c_y * a_x  (weights positive)
    return objective[x] * weight(y) > objective[y] * weight(x);
  });
  return order;
}

// Fills `point` (dense, zero-initialized) greedily over the items of `order`
// for which `allowed` holds. Returns the objective value attained.
template <typename Allowed>
Rational GreedyFill(const Instance& instance, std::span<const Rational> objective,
                    std::span<const std::size_t> order, Allowed allowed,
                    std::vector<Rational>& point) {
  Rational remaining = instance.capacity();
  Rational value;
  for (std::size_t k : order) {
    if (!allowed(k)) continue;
    const Rational& a = instance.weight(instance.var_at(k));
    if (a.is_zero()) {
      point[k] = 1;
      value += objective[k];
      continue;
    }
    if (remaining.sign() <= 0) break;
    if (a <= remaining) {
      point[k] = 1;
      remaining -= a;
      value += objective[k];
    } else {
      point[k] = remaining / a;
      value += objective[k] * point[k];
      remaining = 0;
    }
  }
  return value;
}

}  // namespace ckp::internal
