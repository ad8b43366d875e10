#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ckp/model.hpp"
#include "ckp/oracle.hpp"

namespace ckp {

// One item per group, sorted by group. Covers and packs are ItemSets that
// satisfy the corresponding weight predicate.
class ItemSet {
 public:
  // Throws kPrecondition if `items` is empty, repeats a group, or names a
  // variable outside the instance.
  static ItemSet Create(const Instance& instance, std::vector<VarRef> items);

  const std::vector<VarRef>& items() const { return items_; }
  // s = sum of a_ij over the items.
  const Rational& weight() const { return weight_; }
  // M_T: the groups touched, ascending.
  std::vector<int> groups() const;
  bool has_group(int group) const { return item_of(group).has_value(); }
  std::optional<VarRef> item_of(int group) const;
  std::size_t size() const { return items_.size(); }

  // Same set without the item of `group`; throws if that leaves it empty.
  ItemSet Without(const Instance& instance, int group) const;

  std::string ToString() const;  // "{(1,1),(3,1)}"
  friend bool operator==(const ItemSet& a, const ItemSet& b) { return a.items_ == b.items_; }
  friend bool operator<(const ItemSet& a, const ItemSet& b) { return a.items_ < b.items_; }

 private:
  std::vector<VarRef> items_;
  Rational weight_;
};

enum class CutFamily { kLiftedCover1, kLiftedCover2, kPack1, kPack2, kPack3 };

inline constexpr CutFamily kAllFamilies[] = {CutFamily::kLiftedCover1, CutFamily::kLiftedCover2,
                                             CutFamily::kPack1, CutFamily::kPack2,
                                             CutFamily::kPack3};

std::string_view FamilyName(CutFamily family);  // "lcover1", ..., "pack3"
std::optional<CutFamily> ParseFamily(std::string_view name);

// Which theorem instance produced a cut. `special` is i' for lcover2 (with
// `special_slot` = j') and pack3, and the lexicographically smallest lifting
// witness (i', j') for lcover1. `pivot` is i* for pack2/pack3.
struct Provenance {
  ItemSet items;
  std::optional<int> pivot;
  std::optional<int> special;
  std::optional<int> special_slot;

  std::string ToString(CutFamily family) const;
  // Shortlex: fewer groups first, then groups, slots, pivot, special index.
  friend bool operator<(const Provenance& a, const Provenance& b);
};

struct GeneratedCut {
  LinearInequality inequality;
  CutFamily family;
  Provenance provenance;
  bool facet_guaranteed = false;
};

bool IsCover(const Instance& instance, const ItemSet& items);
bool IsPack(const Instance& instance, const ItemSet& items);
// Pack whose items all sit in the last slot and where swapping any
// non-singleton group to its second-to-last slot overflows b.
bool IsMaximalSwitchingPack(const Instance& instance, const ItemSet& items);

// Generators. Each requires a normalized instance and throws kPrecondition
// naming the failed hypothesis.
GeneratedCut LiftedCoverInequality1(const Instance& instance, const ItemSet& cover);
GeneratedCut LiftedCoverInequality2(const Instance& instance, const ItemSet& cover,
                                    int special_group);
GeneratedCut PackInequality1(const Instance& instance, const ItemSet& pack);
GeneratedCut PackInequality2(const Instance& instance, const ItemSet& pack, int pivot_group);
GeneratedCut PackInequality3(const Instance& instance, const ItemSet& pack, int pivot_group,
                             int tilt_group);

// Applies the tilting transformation to a pack-2 cut for tilt group i'
// (a singleton group of the pack): lowers the x_{i'1} coefficient by
// (b-s) a_{i'1} / (a_{i*j*} + b - s), raises the coefficients of the pack
// items in non-singleton groups other than i* by the same amount, and scales
// the rhs excess over b by 1 + a_{i'1} / (a_{i*j*} + b - s).
LinearInequality TiltPackCut(const Instance& instance, const GeneratedCut& pack2_cut,
                             int tilt_group);

// Every nonempty last-slot item set that is a maximal switching pack, in
// lexicographic order of item lists. Throws kResource if 2^m > limit.
std::vector<ItemSet> EnumerateMaximalSwitchingPacks(const Instance& instance,
                                                    std::uint64_t limit = kDefaultEnumerationLimit);

// Every one-item-per-group set (nonempty), in support-pattern order.
// Throws kResource if the pattern count exceeds limit.
std::vector<ItemSet> EnumerateItemSets(const Instance& instance,
                                       std::uint64_t limit = kDefaultEnumerationLimit);

// Every member of `family` built on exactly this item set whose hypotheses
// hold (all admissible pivots / special groups), in ascending index order.
std::vector<GeneratedCut> CutsFromItemSet(const Instance& instance, const ItemSet& set,
                                          CutFamily family);

enum class PackScope {
  kMaximalSwitching,  // pack families from maximal switching packs only
  kAll,               // pack families from every pack
};

// All cuts of `family` whose hypotheses hold, in deterministic order. Cover
// families range over every cover.
std::vector<GeneratedCut> GenerateFamily(const Instance& instance, CutFamily family,
                                         PackScope scope = PackScope::kMaximalSwitching,
                                         std::uint64_t limit = kDefaultEnumerationLimit);

// Inequality text followed by a provenance comment and `facet: ...`.
std::string FormatCut(const GeneratedCut& cut, std::string_view facet_verdict);

}  // namespace ckp
