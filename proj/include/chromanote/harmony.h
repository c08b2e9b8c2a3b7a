/**
 * @file harmony.h
 * @brief Color-harmony detection on the 12-sector hue circle.
 *
 * Harmonies are geometric patterns among the qualifying sectors of a segment:
 *   Complementary       {a, a+6}
 *   Analogous           {a, a+1}
 *   SplitComplementary  {a, a+1, a+7} or {a, a+1, a+6}
 *   Triad               {a, a+2, a+4} (60-degree steps), or {a, a+4, a+8}
 *                       under the conventional 120-degree reading
 *   Tetradic            two complementary pairs that are not a square
 *   Square              {a, a+3, a+6, a+9}
 * all taken mod 12.
 */

#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "chromanote/color.h"

namespace chromanote {

enum class HarmonyClass {
  kComplementary,
  kAnalogous,
  kSplitComplementary,
  kTriad,
  kTetradic,
  kSquare,
};

enum class TriadConvention {
  kConsecutive60,  ///< consecutive members 60 degrees apart: {a, a+2, a+4}
  kStandard120,    ///< equilateral triangle: {a, a+4, a+8}
};

/// Detection precedence, most specific first.
inline constexpr HarmonyClass kHarmonyPrecedence[] = {
    HarmonyClass::kSquare,     HarmonyClass::kTetradic,      HarmonyClass::kTriad,
    HarmonyClass::kSplitComplementary, HarmonyClass::kComplementary, HarmonyClass::kAnalogous,
};

struct Harmony {
  HarmonyClass kind;
  /// Member sectors, ascending.
  std::vector<SectorIndex> members;

  friend bool operator==(const Harmony&, const Harmony&) = default;
};

int harmony_arity(HarmonyClass kind);
std::string_view harmony_name(HarmonyClass kind);

/// Circular distance on the 12-sector circle, 0..6.
int sector_distance(SectorIndex a, SectorIndex b);

/// Harmony formed by exactly these sectors, or nullopt. Duplicates are
/// ignored; throws ArityError unless 2..4 distinct sectors remain.
std::optional<HarmonyClass> classify(std::span<const SectorIndex> members,
                                     TriadConvention triad = TriadConvention::kConsecutive60);

/// Greedy detection over the ranked qualifying sectors. Classes are tried in
/// kHarmonyPrecedence order; within a class, candidates are ordered by the
/// ranks of their members (best-ranked member first, then the next, ...).
/// Each sector joins at most one harmony.
std::vector<Harmony> detect_harmonies(std::span<const SectorShare> ranked,
                                      TriadConvention triad = TriadConvention::kConsecutive60);

}  // namespace chromanote
