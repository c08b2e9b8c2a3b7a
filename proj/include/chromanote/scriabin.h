/**
 * @file scriabin.h
 * @brief Sector-to-pitch-class mapping and chord construction.
 *
 * The default table is compiled from data/scriabin.table; a file in the same
 * "sector_index pitch_class_name" format can replace it at run time.
 */

#pragma once

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chromanote/color.h"
#include "chromanote/harmony.h"

namespace chromanote {

/// Pitch class, 0 = C ... 11 = B.
class PitchClass {
 public:
  constexpr PitchClass() = default;
  /// Throws std::out_of_range outside [0, 11].
  explicit PitchClass(int semitone);

  constexpr int semitone() const { return semitone_; }
  PitchClass transposed(int semitones) const;
  std::string_view name() const;

  /// Accepts C, C#, Db, ..., B (sharps and flats). Throws ConfigError.
  static PitchClass parse(std::string_view name);

  friend constexpr auto operator<=>(PitchClass, PitchClass) = default;

 private:
  int semitone_ = 0;
};

/// Bijection from the 12 hue sectors to the 12 pitch classes.
class MappingTable {
 public:
  /// Throws ConfigError if `entries` is not a bijection.
  explicit MappingTable(const std::array<PitchClass, kSectorCount>& entries);

  static const MappingTable& scriabin();

  /// Parses "sector_index pitch_class_name" lines. Blank lines and text after
  /// '#' are ignored. Every sector must appear exactly once.
  static MappingTable parse(std::string_view text);
  static MappingTable load(const std::filesystem::path& path);

  PitchClass operator[](SectorIndex s) const { return entries_[s.value()]; }
  const std::array<PitchClass, kSectorCount>& entries() const { return entries_; }

 private:
  std::array<PitchClass, kSectorCount> entries_;
};

enum class ChordQuality { kUnset, kMajor, kMinor };

std::string_view quality_name(ChordQuality q);

struct Chord {
  PitchClass root;
  /// Root first, no duplicates.
  std::vector<PitchClass> members;
  ChordQuality quality = ChordQuality::kUnset;

  friend bool operator==(const Chord&, const Chord&) = default;
};

PitchClass sector_to_pitch_class(SectorIndex s, const MappingTable& table);

/// Root is the pitch of the best-ranked member sector; remaining members
/// follow in rank order. Throws std::invalid_argument if a harmony member is
/// not among `ranked`.
Chord chord_from_harmony(const Harmony& h, std::span<const SectorShare> ranked, const MappingTable& table);

/// Minor (adds root + 3) when the segment is strictly darker than the image,
/// otherwise Major (adds root + 4). The chord must still be Unset.
Chord apply_quality(Chord c, double segment_mean_lum, double image_mean_lum);

}  // namespace chromanote
