// Shared fixtures and independent brute-force oracles for the test suites.
// Nothing here calls into the oracle, cuts or separation code it is used to
// check; only the model types and Rational are shared.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ckp/model.hpp"

namespace ckp::testing {

inline Group MakeGroup(std::vector<std::int64_t> weights) {
  Group g;
  for (std::int64_t w : weights) {
    g.weights.emplace_back(w);
    g.profits.emplace_back(w);
  }
  return g;
}

inline Group MakeGroup(std::vector<std::int64_t> weights, std::vector<std::int64_t> profits) {
  Group g;
  for (std::int64_t w : weights) g.weights.emplace_back(w);
  for (std::int64_t c : profits) g.profits.emplace_back(c);
  return g;
}

// Profits equal weights in the three worked examples.
inline Instance InstanceB21() {
  return Instance::Create({MakeGroup({2}), MakeGroup({4}), MakeGroup({8}), MakeGroup({10, 6}),
                           MakeGroup({8, 4})},
                          21);
}

inline Instance InstanceB22() {
  return Instance::Create(
      {MakeGroup({2}), MakeGroup({14, 10}), MakeGroup({13, 9}), MakeGroup({9, 6})}, 22);
}

inline Instance InstanceB36() {
  return Instance::Create({MakeGroup({1}), MakeGroup({6}), MakeGroup({14, 10}),
                           MakeGroup({13, 9}), MakeGroup({12, 8})},
                          36);
}

struct Term {
  int group;
  int slot;
  Rational value;
};

inline LinearInequality MakeInequality(std::vector<Term> terms, Rational rhs) {
  LinearInequality q;
  for (Term& t : terms) q.coeffs.set({t.group, t.slot}, std::move(t.value));
  q.rhs = std::move(rhs);
  return q;
}

inline Point MakePoint(std::vector<Term> terms) {
  Point p;
  for (Term& t : terms) p.values.set({t.group, t.slot}, std::move(t.value));
  return p;
}

using Dense = std::vector<Rational>;

// Feasible points of S with at most one fractional entry that make the
// knapsack row tight: every one-slot-per-group choice, every subset of it at
// value 1, plus each remaining chosen item filling the leftover capacity.
// Walks the groups recursively; unrelated to the oracle's odometer.
inline std::vector<Dense> BruteCandidates(const Instance& instance) {
  const std::size_t d = instance.dimension();
  std::set<std::string> seen;
  std::vector<Dense> out;
  std::vector<VarRef> chosen;
  auto emit = [&](const Dense& x) {
    std::string key;
    for (const Rational& v : x) key += v.ToString() + ",";
    if (seen.insert(key).second) out.push_back(x);
  };
  auto expand = [&]() {
    const std::size_t k = chosen.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      Dense x(d);
      Rational load;
      for (std::size_t t = 0; t < k; ++t) {
        if (mask >> t & 1) {
          x[instance.index(chosen[t])] = 1;
          load += instance.weight(chosen[t]);
        }
      }
      if (load > instance.capacity()) continue;
      emit(x);
      for (std::size_t t = 0; t < k; ++t) {
        if (mask >> t & 1) continue;
        const Rational& a = instance.weight(chosen[t]);
        if (a.is_zero()) continue;
        const Rational value = (instance.capacity() - load) / a;
        if (value.sign() > 0 && value < Rational(1)) {
          Dense y = x;
          y[instance.index(chosen[t])] = value;
          emit(y);
        }
      }
    }
  };
  auto recurse = [&](auto&& self, int group) -> void {
    if (group > instance.num_groups()) {
      expand();
      return;
    }
    self(self, group + 1);
    for (int j = 1; j <= instance.group_size(group); ++j) {
      chosen.push_back({group, j});
      self(self, group + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 1);
  return out;
}

inline Rational DenseDot(const Instance& instance, const SparseVector& coeffs, const Dense& x) {
  Rational s;
  for (const auto& [v, c] : coeffs.entries()) s += c * x[instance.index(v)];
  return s;
}

inline Rational BruteMax(const Instance& instance, const SparseVector& objective) {
  Rational best;
  for (const Dense& x : BruteCandidates(instance)) best = Max(best, DenseDot(instance, objective, x));
  return best;
}

inline bool BruteValid(const Instance& instance, const LinearInequality& q) {
  return BruteMax(instance, q.coeffs) <= q.rhs;
}

// Rank of a matrix by column-wise elimination over a copy.
inline long BruteRank(std::vector<Dense> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  long rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<long>(rows.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c].is_zero()) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline long BruteAffineDim(const std::vector<Dense>& points) {
  if (points.empty()) return -1;
  std::vector<Dense> diffs;
  for (std::size_t k = 1; k < points.size(); ++k) {
    Dense v(points[k].size());
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = points[k][c] - points[0][c];
    diffs.push_back(std::move(v));
  }
  return BruteRank(std::move(diffs));
}

inline long BruteFaceDimension(const Instance& instance, const LinearInequality& q) {
  std::vector<Dense> tight;
  for (const Dense& x : BruteCandidates(instance)) {
    if (DenseDot(instance, q.coeffs, x) == q.rhs) tight.push_back(x);
  }
  return BruteAffineDim(tight);
}

// Maximal switching packs by scanning every subset of groups.
inline std::vector<std::vector<VarRef>> BruteMaximalSwitchingPacks(const Instance& instance) {
  const int m = instance.num_groups();
  std::vector<std::vector<VarRef>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<VarRef> items;
    Rational s;
    for (int i = 1; i <= m; ++i) {
      if (mask >> (i - 1) & 1) {
        items.push_back({i, instance.group_size(i)});
        s += instance.last_weight(i);
      }
    }
    if (!(s < instance.capacity())) continue;
    bool ok = true;
    for (const VarRef& v : items) {
      const int n = instance.group_size(v.group);
      if (n == 1) continue;
      if (!(s - instance.weight({v.group, n}) + instance.weight({v.group, n - 1}) >
            instance.capacity())) {
        ok = false;
      }
    }
    if (ok) out.push_back(items);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Subset-sum yes/no for sum(alphas) = 2 beta.
inline bool PartitionHasHalf(const std::vector<std::int64_t>& alphas, std::int64_t beta) {
  std::vector<bool> reach(static_cast<std::size_t>(beta) + 1, false);
  reach[0] = true;
  for (std::int64_t a : alphas) {
    for (std::int64_t s = beta; s >= a; --s) {
      if (reach[s - a]) reach[s] = true;
    }
  }
  return reach[beta];
}

// Random normalized instance with m <= max_groups, n_i <= max_slots and
// integer data in [1, max_value]; b drawn in [1, total weight].
inline Instance RandomInstance(std::mt19937_64& rng, int max_groups, int max_slots,
                               int max_value) {
  std::uniform_int_distribution<int> groups(1, max_groups), slots(1, max_slots),
      value(1, max_value);
  const int m = groups(rng);
  std::vector<Group> gs;
  std::int64_t total = 0;
  for (int i = 0; i < m; ++i) {
    const int n = slots(rng);
    std::vector<std::int64_t> a, c;
    for (int j = 0; j < n; ++j) {
      a.push_back(value(rng));
      c.push_back(value(rng));
      total += a.back();
    }
    std::vector<int> order(n);
    for (int j = 0; j < n; ++j) order[j] = j;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a[x] > a[y]; });
    std::vector<std::int64_t> as, cs;
    for (int j : order) {
      as.push_back(a[j]);
      cs.push_back(c[j]);
    }
    gs.push_back(MakeGroup(as, cs));
  }
  std::uniform_int_distribution<std::int64_t> cap(1, total);
  return Instance::Create(std::move(gs), Rational(cap(rng)));
}

}  // namespace ckp::testing
