#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ckp/cuts.hpp"
#include "ckp/lp.hpp"

namespace ckp {

enum class SeparationMode {
  kGreedy,            // greedy pack separation only
  kGreedyThenExact,   // exact enumeration when greedy finds nothing
};

struct SolverConfig {
  std::vector<CutFamily> families{std::begin(kAllFamilies), std::end(kAllFamilies)};
  SeparationMode separation = SeparationMode::kGreedy;
  int max_cuts_per_node = 10;
  std::uint64_t node_limit = 100'000;
  std::uint64_t enumeration_limit = kDefaultEnumerationLimit;
  // Check the dual certificate of every LP solved; throws on failure.
  bool verify_certificates = false;
  bool record_nodes = false;
};

struct NodeRecord {
  std::optional<Rational> parent_bound;  // empty at the root
  std::optional<Rational> lp_bound;      // empty if the node LP was infeasible
};

struct SolveReport {
  bool optimal = false;  // false when the node limit stopped the search
  bool trivial = false;  // answered from the assumption report, no search
  Rational value;
  Point point;
  Rational best_bound;
  std::uint64_t nodes = 0;
  std::uint64_t lp_pivots = 0;
  std::map<CutFamily, int> cuts_per_family;
  std::vector<GeneratedCut> cuts;  // global pool, in insertion order
  std::vector<NodeRecord> node_log;
};

// Exact branch-and-cut over S with SOS1 index-split branching and best-bound
// node selection (FIFO among equal bounds). Requires a normalized instance.
SolveReport BranchAndCut(const Instance& instance, const SolverConfig& config = {});

}  // namespace ckp
