#include "chromanote/harmony.h"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <string>

#include "chromanote/errors.h"

namespace chromanote {

namespace {

// True if `sorted` equals {a + offset mod 12 : offset in pattern} for some a.
bool matches_pattern(const std::vector<int>& sorted, std::initializer_list<int> pattern) {
  if (sorted.size() != pattern.size()) return false;
  for (int a : sorted) {
    std::vector<int> shifted;
    for (int offset : pattern) shifted.push_back((a + offset) % kSectorCount);
    std::sort(shifted.begin(), shifted.end());
    if (shifted == sorted) return true;
  }
  return false;
}

bool closed_under_complement(const std::vector<int>& sorted) {
  return std::all_of(sorted.begin(), sorted.end(), [&sorted](int s) {
    return std::binary_search(sorted.begin(), sorted.end(), (s + 6) % kSectorCount);
  });
}

std::optional<HarmonyClass> classify_sorted(const std::vector<int>& s, TriadConvention triad) {
  switch (s.size()) {
    case 2:
      if (matches_pattern(s, {0, 6})) return HarmonyClass::kComplementary;
      if (matches_pattern(s, {0, 1})) return HarmonyClass::kAnalogous;
      return std::nullopt;
    case 3:
      if (triad == TriadConvention::kConsecutive60 ? matches_pattern(s, {0, 2, 4}) : matches_pattern(s, {0, 4, 8})) {
        return HarmonyClass::kTriad;
      }
      if (matches_pattern(s, {0, 1, 7}) || matches_pattern(s, {0, 1, 6})) {
        return HarmonyClass::kSplitComplementary;
      }
      return std::nullopt;
    case 4:
      if (matches_pattern(s, {0, 3, 6, 9})) return HarmonyClass::kSquare;
      if (closed_under_complement(s)) return HarmonyClass::kTetradic;
      return std::nullopt;
    default:
      throw ArityError("harmony candidates need 2 to 4 distinct sectors, got " + std::to_string(s.size()));
  }
}

// Calls visit(indices) for each k-combination of [0, n) in lexicographic order.
template <typename Visit>
void for_each_combination(int n, int k, Visit&& visit) {
  if (k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

int harmony_arity(HarmonyClass kind) {
  switch (kind) {
    case HarmonyClass::kComplementary:
    case HarmonyClass::kAnalogous:
      return 2;
    case HarmonyClass::kSplitComplementary:
    case HarmonyClass::kTriad:
      return 3;
    case HarmonyClass::kTetradic:
    case HarmonyClass::kSquare:
      return 4;
  }
  return 0;
}

std::string_view harmony_name(HarmonyClass kind) {
  switch (kind) {
    case HarmonyClass::kComplementary: return "complementary";
    case HarmonyClass::kAnalogous: return "analogous";
    case HarmonyClass::kSplitComplementary: return "split_complementary";
    case HarmonyClass::kTriad: return "triad";
    case HarmonyClass::kTetradic: return "tetradic";
    case HarmonyClass::kSquare: return "square";
  }
  return "unknown";
}

int sector_distance(SectorIndex a, SectorIndex b) {
  const int forward = ((a.value() - b.value()) % kSectorCount + kSectorCount) % kSectorCount;
  return std::min(forward, kSectorCount - forward);
}

std::optional<HarmonyClass> classify(std::span<const SectorIndex> members, TriadConvention triad) {
  std::vector<int> sorted;
  sorted.reserve(members.size());
  for (SectorIndex s : members) sorted.push_back(s.value());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return classify_sorted(sorted, triad);
}

std::vector<Harmony> detect_harmonies(std::span<const SectorShare> ranked, TriadConvention triad) {
  const int n = static_cast<int>(ranked.size());
  std::vector<bool> used(n, false);
  std::vector<Harmony> found;

  for (HarmonyClass kind : kHarmonyPrecedence) {
    // Lexicographic order over rank positions is exactly the candidate order.
    for_each_combination(n, harmony_arity(kind), [&](const std::vector<int>& idx) {
      if (std::any_of(idx.begin(), idx.end(), [&used](int i) { return used[i]; })) return;
      std::vector<int> sectors;
      for (int i : idx) sectors.push_back(ranked[i].sector.value());
      std::sort(sectors.begin(), sectors.end());
      if (std::adjacent_find(sectors.begin(), sectors.end()) != sectors.end()) return;
      if (classify_sorted(sectors, triad) != kind) return;

      Harmony h{kind, {}};
      for (int s : sectors) h.members.emplace_back(s);
      for (int i : idx) used[i] = true;
      found.push_back(std::move(h));
    });
  }
  return found;
}

}  // namespace chromanote
