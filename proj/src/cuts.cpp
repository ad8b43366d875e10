#include "ckp/cuts.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <tuple>

#include "ckp/error.hpp"
#include "ckp/io.hpp"

namespace ckp {
namespace {

void RequireNormalized(const Instance& instance) {
  if (!instance.is_normalized()) {
    Fail(ErrorKind::kPrecondition,
         "instance is not normalized (weights must be non-increasing within each group)");
  }
}

[[noreturn]] void Hypothesis(const std::string& what) { Fail(ErrorKind::kPrecondition, what); }

std::string G(int group) { return std::to_string(group); }

// |M_P - M_0|
int NonSingletonCount(const Instance& instance, const ItemSet& items) {
  int count = 0;
  for (const VarRef& v : items.items()) count += instance.is_singleton(v.group) ? 0 : 1;
  return count;
}

// Lexicographically smallest (i', j') with r_{i'} < j' <= n_{i'} and
// sum_{i != i'} a_{i r_i} + a_{i'j'} < b.
std::optional<std::pair<int, int>> LiftingWitness(const Instance& instance, const ItemSet& cover) {
  for (const VarRef& item : cover.items()) {
    const Rational rest = cover.weight() - instance.weight(item);
    for (int j = item.slot + 1; j <= instance.group_size(item.group); ++j) {
      if (rest + instance.weight({item.group, j}) < instance.capacity()) {
        return std::make_pair(item.group, j);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> LiftedCover2Violation(const Instance& instance, const ItemSet& cover,
                                                  int special) {
  if (!IsCover(instance, cover)) return "item set " + cover.ToString() + " is not a cover";
  const auto item = cover.item_of(special);
  if (!item) return "group " + G(special) + " is not in the cover";
  if (item->slot >= instance.group_size(special)) {
    return "special item (" + G(special) + "," + G(item->slot) + ") must satisfy j' < n_i'";
  }
  if (!(cover.weight() - instance.weight(*item) + instance.last_weight(special) <
        instance.capacity())) {
    return "lifting condition violated: sum of other cover weights plus a_{i',n_i'} is not < b";
  }
  return std::nullopt;
}

std::optional<std::string> Pack2Violation(const Instance& instance, const ItemSet& pack,
                                          int pivot) {
  if (!IsPack(instance, pack)) return "item set " + pack.ToString() + " is not a pack";
  if (NonSingletonCount(instance, pack) < 2) {
    return "pack needs at least two groups outside M_0";
  }
  const auto item = pack.item_of(pivot);
  if (!item) return "pivot group " + G(pivot) + " is not in the pack";
  if (instance.is_singleton(pivot)) return "pivot group " + G(pivot) + " is in M_0";
  if (item->slot != instance.group_size(pivot)) {
    return "pivot item (" + G(pivot) + "," + G(item->slot) + ") is not the last slot";
  }
  return std::nullopt;
}

std::optional<std::string> Pack3Violation(const Instance& instance, const ItemSet& pack,
                                          int pivot, int tilt) {
  if (auto why = Pack2Violation(instance, pack, pivot)) return why;
  if (!pack.has_group(tilt)) return "tilt group " + G(tilt) + " is not in the pack";
  if (!instance.is_singleton(tilt)) return "tilt group " + G(tilt) + " is not in M_0";
  return std::nullopt;
}

}  // namespace

ItemSet ItemSet::Create(const Instance& instance, std::vector<VarRef> items) {
  if (items.empty()) Fail(ErrorKind::kPrecondition, "item set is empty");
  std::sort(items.begin(), items.end());
  ItemSet set;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (!instance.contains(items[k])) {
      Fail(ErrorKind::kPrecondition, items[k].ToString() + " is outside the instance");
    }
    if (k > 0 && items[k].group == items[k - 1].group) {
      Fail(ErrorKind::kPrecondition,
           "item set uses group " + G(items[k].group) + " more than once");
    }
    set.weight_ += instance.weight(items[k]);
  }
  set.items_ = std::move(items);
  return set;
}

std::vector<int> ItemSet::groups() const {
  std::vector<int> out;
  for (const VarRef& v : items_) out.push_back(v.group);
  return out;
}

std::optional<VarRef> ItemSet::item_of(int group) const {
  const auto it = std::lower_bound(items_.begin(), items_.end(), VarRef{group, 0});
  if (it == items_.end() || it->group != group) return std::nullopt;
  return *it;
}

ItemSet ItemSet::Without(const Instance& instance, int group) const {
  std::vector<VarRef> rest;
  for (const VarRef& v : items_) {
    if (v.group != group) rest.push_back(v);
  }
  return Create(instance, std::move(rest));
}

std::string ItemSet::ToString() const {
  std::string out = "{";
  for (std::size_t k = 0; k < items_.size(); ++k) {
    if (k) out += ",";
    out += "(" + G(items_[k].group) + "," + G(items_[k].slot) + ")";
  }
  return out + "}";
}

std::string_view FamilyName(CutFamily family) {
  switch (family) {
    case CutFamily::kLiftedCover1: return "lcover1";
    case CutFamily::kLiftedCover2: return "lcover2";
    case CutFamily::kPack1: return "pack1";
    case CutFamily::kPack2: return "pack2";
    case CutFamily::kPack3: return "pack3";
  }
  return "?";
}

std::optional<CutFamily> ParseFamily(std::string_view name) {
  for (CutFamily f : kAllFamilies) {
    if (FamilyName(f) == name) return f;
  }
  return std::nullopt;
}

std::string Provenance::ToString(CutFamily family) const {
  std::ostringstream out;
  const bool cover =
      family == CutFamily::kLiftedCover1 || family == CutFamily::kLiftedCover2;
  out << FamilyName(family) << ' ' << (cover ? "C=" : "P=") << items.ToString();
  if (pivot) out << " i*=" << *pivot;
  if (family == CutFamily::kLiftedCover1 && special) {
    out << " witness=(" << *special << ',' << special_slot.value_or(0) << ')';
  } else if (family == CutFamily::kLiftedCover2 && special) {
    out << " i'j'=(" << *special << ',' << special_slot.value_or(0) << ')';
  } else if (special) {
    out << " i'=" << *special;
  }
  return out.str();
}

bool operator<(const Provenance& a, const Provenance& b) {
  auto slots = [](const ItemSet& s) {
    std::vector<int> out;
    for (const VarRef& v : s.items()) out.push_back(v.slot);
    return out;
  };
  return std::forward_as_tuple(a.items.size(), a.items.groups(), slots(a.items), a.pivot,
                               a.special, a.special_slot) <
         std::forward_as_tuple(b.items.size(), b.items.groups(), slots(b.items), b.pivot,
                               b.special, b.special_slot);
}

bool IsCover(const Instance& instance, const ItemSet& items) {
  return items.weight() > instance.capacity();
}

bool IsPack(const Instance& instance, const ItemSet& items) {
  return items.weight() < instance.capacity();
}

bool IsMaximalSwitchingPack(const Instance& instance, const ItemSet& items) {
  if (!IsPack(instance, items)) return false;
  for (const VarRef& v : items.items()) {
    if (v.slot != instance.group_size(v.group)) return false;
  }
  for (const VarRef& v : items.items()) {
    if (instance.is_singleton(v.group)) continue;
    const Rational swapped = items.weight() - instance.weight(v) +
                             instance.weight({v.group, v.slot - 1});
    if (!(swapped > instance.capacity())) return false;
  }
  return true;
}

GeneratedCut LiftedCoverInequality1(const Instance& instance, const ItemSet& cover) {
  RequireNormalized(instance);
  if (!IsCover(instance, cover)) Hypothesis("item set " + cover.ToString() + " is not a cover");
  const auto witness = LiftingWitness(instance, cover);
  if (!witness) Hypothesis("lifting condition violated for every (i', j')");

  const Rational& b = instance.capacity();
  GeneratedCut cut{{}, CutFamily::kLiftedCover1, {cover, std::nullopt, witness->first,
                                                  witness->second}, true};
  for (const VarRef& item : cover.items()) {
    const int i = item.group;
    const Rational& a_r = instance.weight(item);
    const Rational residual = b - (cover.weight() - a_r);
    for (int j = 1; j < item.slot; ++j) cut.inequality.coeffs.set({i, j}, a_r);
    for (int j = item.slot; j <= instance.group_size(i); ++j) {
      cut.inequality.coeffs.set({i, j}, Max(instance.weight({i, j}), residual));
    }
    cut.facet_guaranteed = cut.facet_guaranteed && item.slot == 1;
  }
  cut.inequality.rhs = b;
  return cut;
}

GeneratedCut LiftedCoverInequality2(const Instance& instance, const ItemSet& cover,
                                    int special_group) {
  RequireNormalized(instance);
  if (auto why = LiftedCover2Violation(instance, cover, special_group)) Hypothesis(*why);

  const Rational& b = instance.capacity();
  const int ip = special_group;
  const VarRef special = *cover.item_of(ip);
  GeneratedCut cut{{}, CutFamily::kLiftedCover2, {cover, std::nullopt, ip, special.slot}, true};

  const Rational others = cover.weight() - instance.weight(special);  // sum_{M_C - i'} a_{i t_i}
  for (int j = 1; j <= instance.group_size(ip); ++j) {
    cut.inequality.coeffs.set({ip, j}, Max(instance.weight({ip, j}), b - others));
  }
  for (const VarRef& item : cover.items()) {
    const int i = item.group;
    if (i == ip) continue;
    const Rational& a_t = instance.weight(item);
    // b - sum_{M_C - {i, i'}} a_{k t_k} - a_{i' n_i'}, positive by the hypothesis
    const Rational denom = b - (others - a_t) - instance.last_weight(ip);
    for (int j = 1; j <= item.slot; ++j) {
      cut.inequality.coeffs.set({i, j}, a_t * Max(Rational(1), instance.weight({i, j}) / denom));
    }
    for (int j = item.slot + 1; j <= instance.group_size(i); ++j) {
      cut.inequality.coeffs.set({i, j}, instance.weight({i, j}));
    }
    cut.facet_guaranteed = cut.facet_guaranteed && item.slot == instance.group_size(i);
  }
  cut.inequality.rhs = b;
  return cut;
}

GeneratedCut PackInequality1(const Instance& instance, const ItemSet& pack) {
  RequireNormalized(instance);
  if (!IsPack(instance, pack)) Hypothesis("item set " + pack.ToString() + " is not a pack");

  const Rational& b = instance.capacity();
  const Rational slack = b - pack.weight();
  const int k = NonSingletonCount(instance, pack);
  GeneratedCut cut{{}, CutFamily::kPack1, {pack, std::nullopt, std::nullopt, std::nullopt},
                   false};
  bool touches_m0 = false;
  for (const VarRef& item : pack.items()) {
    const int i = item.group;
    for (int j = 1; j <= instance.group_size(i); ++j) {
      cut.inequality.coeffs.set({i, j}, instance.weight({i, j}));
    }
    if (instance.is_singleton(i)) {
      touches_m0 = true;
    } else {
      cut.inequality.coeffs.add(item, slack);
    }
  }
  cut.inequality.rhs = b + Rational(k - 1) * slack;
  // With every group singleton the cut is sum a x <= s, a facet only for |P| = 1.
  cut.facet_guaranteed = touches_m0 && (k > 0 || pack.size() == 1) &&
                         IsMaximalSwitchingPack(instance, pack);
  return cut;
}

namespace {

// Coefficients shared by the pack-2 and pack-3 families on the pivot group:
// a_{i*j*} on x_{i*j*} and a_{i*j*} max{1, a_{i*j} / (a_{i*j*} + b - s)} elsewhere.
void SetPivotGroup(const Instance& instance, const ItemSet& pack, int pivot,
                   SparseVector& coeffs) {
  const VarRef star = *pack.item_of(pivot);
  const Rational& a_star = instance.weight(star);
  const Rational denom = a_star + instance.capacity() - pack.weight();
  for (int j = 1; j <= instance.group_size(pivot); ++j) {
    if (j == star.slot) {
      coeffs.set(star, a_star);
    } else {
      coeffs.set({pivot, j}, a_star * Max(Rational(1), instance.weight({pivot, j}) / denom));
    }
  }
}

}  // namespace

GeneratedCut PackInequality2(const Instance& instance, const ItemSet& pack, int pivot_group) {
  RequireNormalized(instance);
  if (auto why = Pack2Violation(instance, pack, pivot_group)) Hypothesis(*why);

  const Rational& b = instance.capacity();
  const Rational slack = b - pack.weight();
  const int k = NonSingletonCount(instance, pack);
  GeneratedCut cut{{}, CutFamily::kPack2, {pack, pivot_group, std::nullopt, std::nullopt},
                   IsMaximalSwitchingPack(instance, pack)};
  for (const VarRef& item : pack.items()) {
    const int i = item.group;
    if (i == pivot_group) continue;
    for (int j = 1; j <= instance.group_size(i); ++j) {
      cut.inequality.coeffs.set({i, j}, instance.weight({i, j}));
    }
    if (!instance.is_singleton(i)) cut.inequality.coeffs.add(item, slack);
  }
  SetPivotGroup(instance, pack, pivot_group, cut.inequality.coeffs);
  cut.inequality.rhs = b + Rational(k - 2) * slack;
  return cut;
}

GeneratedCut PackInequality3(const Instance& instance, const ItemSet& pack, int pivot_group,
                             int tilt_group) {
  RequireNormalized(instance);
  if (auto why = Pack3Violation(instance, pack, pivot_group, tilt_group)) Hypothesis(*why);

  const Rational& b = instance.capacity();
  const Rational slack = b - pack.weight();
  const int k = NonSingletonCount(instance, pack);
  const Rational& a_star = instance.weight(*pack.item_of(pivot_group));
  const Rational& a_tilt = instance.weight({tilt_group, 1});
  const Rational factor = Rational(1) + a_tilt / (a_star + slack);

  const ItemSet reduced = pack.Without(instance, tilt_group);
  GeneratedCut cut{{}, CutFamily::kPack3, {pack, pivot_group, tilt_group, std::nullopt},
                   IsMaximalSwitchingPack(instance, reduced)};
  cut.inequality.coeffs.set({tilt_group, 1}, a_star * a_tilt / (a_star + slack));
  for (const VarRef& item : pack.items()) {
    const int i = item.group;
    if (i == pivot_group || i == tilt_group) continue;
    for (int j = 1; j <= instance.group_size(i); ++j) {
      cut.inequality.coeffs.set({i, j}, instance.weight({i, j}));
    }
    if (!instance.is_singleton(i)) cut.inequality.coeffs.add(item, slack * factor);
  }
  SetPivotGroup(instance, pack, pivot_group, cut.inequality.coeffs);
  cut.inequality.rhs = b + Rational(k - 2) * slack * factor;
  return cut;
}

LinearInequality TiltPackCut(const Instance& instance, const GeneratedCut& pack2_cut,
                             int tilt_group) {
  if (pack2_cut.family != CutFamily::kPack2 || !pack2_cut.provenance.pivot) {
    Hypothesis("tilting applies to pack2 cuts only");
  }
  const ItemSet& pack = pack2_cut.provenance.items;
  const int pivot = *pack2_cut.provenance.pivot;
  if (!pack.has_group(tilt_group) || !instance.is_singleton(tilt_group)) {
    Hypothesis("tilt group " + G(tilt_group) + " must be a singleton group of the pack");
  }
  const Rational slack = instance.capacity() - pack.weight();
  const Rational& a_star = instance.weight(*pack.item_of(pivot));
  const Rational delta = instance.weight({tilt_group, 1}) / (a_star + slack);
  const Rational shift = slack * delta;

  LinearInequality out = pack2_cut.inequality;
  out.coeffs.add({tilt_group, 1}, -shift);
  for (const VarRef& item : pack.items()) {
    if (item.group != pivot && !instance.is_singleton(item.group)) out.coeffs.add(item, shift);
  }
  out.rhs = instance.capacity() + (out.rhs - instance.capacity()) * (Rational(1) + delta);
  return out;
}

std::vector<ItemSet> EnumerateMaximalSwitchingPacks(const Instance& instance,
                                                    std::uint64_t limit) {
  const int m = instance.num_groups();
  if (m >= 63 || (std::uint64_t{1} << m) > limit) {
    Fail(ErrorKind::kResource, "2^" + std::to_string(m) + " group subsets exceed enumeration limit " +
                                   std::to_string(limit));
  }
  std::vector<ItemSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<VarRef> items;
    for (int i = 1; i <= m; ++i) {
      if (mask >> (i - 1) & 1) items.push_back({i, instance.group_size(i)});
    }
    ItemSet set = ItemSet::Create(instance, std::move(items));
    if (IsMaximalSwitchingPack(instance, set)) out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ItemSet> EnumerateItemSets(const Instance& instance, std::uint64_t limit) {
  RequirePatternBudget(instance, limit);
  std::vector<ItemSet> out;
  ForEachPattern(instance, [&](const SupportPattern& choice) {
    std::vector<VarRef> items;
    for (int i = 1; i <= instance.num_groups(); ++i) {
      if (choice[i - 1] != 0) items.push_back({i, choice[i - 1]});
    }
    if (!items.empty()) out.push_back(ItemSet::Create(instance, std::move(items)));
  });
  return out;
}

std::vector<GeneratedCut> CutsFromItemSet(const Instance& instance, const ItemSet& set,
                                          CutFamily family) {
  std::vector<GeneratedCut> out;
  switch (family) {
    case CutFamily::kLiftedCover1:
      if (IsCover(instance, set) && LiftingWitness(instance, set)) {
        out.push_back(LiftedCoverInequality1(instance, set));
      }
      break;
    case CutFamily::kLiftedCover2:
      if (!IsCover(instance, set)) break;
      for (int i : set.groups()) {
        if (!LiftedCover2Violation(instance, set, i)) {
          out.push_back(LiftedCoverInequality2(instance, set, i));
        }
      }
      break;
    case CutFamily::kPack1:
      if (IsPack(instance, set)) out.push_back(PackInequality1(instance, set));
      break;
    case CutFamily::kPack2:
      if (!IsPack(instance, set)) break;
      for (int i : set.groups()) {
        if (!Pack2Violation(instance, set, i)) out.push_back(PackInequality2(instance, set, i));
      }
      break;
    case CutFamily::kPack3:
      if (!IsPack(instance, set)) break;
      for (int pivot : set.groups()) {
        for (int tilt : set.groups()) {
          if (!Pack3Violation(instance, set, pivot, tilt)) {
            out.push_back(PackInequality3(instance, set, pivot, tilt));
          }
        }
      }
      break;
  }
  return out;
}

std::vector<GeneratedCut> GenerateFamily(const Instance& instance, CutFamily family,
                                         PackScope scope, std::uint64_t limit) {
  RequireNormalized(instance);
  std::vector<GeneratedCut> out;
  const bool cover_family =
      family == CutFamily::kLiftedCover1 || family == CutFamily::kLiftedCover2;

  std::vector<ItemSet> sets;
  if (cover_family || scope == PackScope::kAll) {
    sets = EnumerateItemSets(instance, limit);
  } else {
    sets = EnumerateMaximalSwitchingPacks(instance, limit);
  }

  for (const ItemSet& set : sets) {
    auto cuts = CutsFromItemSet(instance, set, family);
    std::move(cuts.begin(), cuts.end(), std::back_inserter(out));
  }
  return out;
}

std::string FormatCut(const GeneratedCut& cut, std::string_view facet_verdict) {
  return SerializeInequality(cut.inequality) + "# " + cut.provenance.ToString(cut.family) +
         "\nfacet: " + std::string(facet_verdict) + "\n";
}

}  // namespace ckp
