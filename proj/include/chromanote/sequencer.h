/**
 * @file sequencer.h
 * @brief Turns per-segment color statistics into a timed score.
 *
 * Each segment contributes a monophonic melody (one note per qualifying
 * sector, in rank order) and, when a harmony was found, a chord held under
 * the whole melody. Segments are laid end to end, each opening with its own
 * tempo event.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "chromanote/color.h"
#include "chromanote/harmony.h"
#include "chromanote/scriabin.h"

namespace chromanote {

using Tick = std::uint32_t;

inline constexpr Tick kTicksPerQuarter = 480;
inline constexpr int kMinTempoBpm = 75;
inline constexpr int kMaxTempoBpm = 160;
inline constexpr int kMelodyOctave = 4;
inline constexpr int kChordOctave = 3;

enum class NoteValue { kHalf, kQuarter, kEighth, kSixteenth };

/// Length in quarter notes: 2, 1, 0.5, 0.25.
double quarter_notes(NoteValue v);
Tick note_value_ticks(NoteValue v, Tick ticks_per_quarter = kTicksPerQuarter);
std::string_view note_value_name(NoteValue v);

enum class VelocitySource { kSaturation, kLuminosity };

struct NoteEvent {
  PitchClass pitch;
  int octave = kMelodyOctave;  ///< 1..7
  int velocity = 64;           ///< 1..127
  Tick start = 0;
  Tick duration = 0;           ///< > 0

  /// MIDI key number, 12 * (octave + 1) + semitone.
  int key() const { return 12 * (octave + 1) + pitch.semitone(); }
  Tick end() const { return start + duration; }

  friend bool operator==(const NoteEvent&, const NoteEvent&) = default;
};

struct TempoEvent {
  Tick start = 0;
  int bpm = kMinTempoBpm;

  friend bool operator==(const TempoEvent&, const TempoEvent&) = default;
};

using ScoreEvent = std::variant<TempoEvent, NoteEvent>;

Tick event_start(const ScoreEvent& e);

struct Score {
  /// Sorted by start tick.
  std::vector<ScoreEvent> events;
  Tick ticks_per_quarter = kTicksPerQuarter;
  /// Tick at which the score ends; covers trailing rests.
  Tick end_tick = 0;
};

struct SequencerConfig {
  VelocitySource velocity_source = VelocitySource::kSaturation;
  TriadConvention triad = TriadConvention::kConsecutive60;
  Tick ticks_per_quarter = kTicksPerQuarter;
};

/// Everything derived for one vertical strip of the image. Note start ticks
/// are relative to the start of the segment.
struct SegmentAnalysis {
  std::size_t index = 0;
  HueHistogram histogram;
  std::vector<SectorShare> qualifying;
  std::vector<Harmony> harmonies;
  int tempo_bpm = kMinTempoBpm;
  NoteValue note_value = NoteValue::kHalf;
  std::optional<Chord> chord;
  std::vector<NoteEvent> melody;
  std::vector<NoteEvent> chord_notes;
  Tick duration = 0;

  bool silent() const { return melody.empty(); }
};

/// round(75 + 85 * mean_sat), half up.
int tempo_for_segment(double mean_sat);

/// clamp(round(32 + 95 * m), 1, 127) where m is the sector's mean saturation
/// or luminosity. Throws EmptyBin if the sector holds no pixels.
int velocity_for_sector(const HueHistogram& h, SectorIndex s, VelocitySource source);

/// Fewer colors give longer notes: <=2 half, 3-4 quarter, 5-6 eighth,
/// 7+ sixteenth.
NoteValue duration_for_segment(std::size_t qualifying_count);

/// `qualifying` may be empty, which yields a silent half-note segment.
SegmentAnalysis compose_segment(std::size_t index, const HueHistogram& histogram,
                                std::vector<SectorShare> qualifying, const MappingTable& table,
                                double image_mean_lum, const SequencerConfig& config = {});

Score compose_sequence(std::span<const SegmentAnalysis> segments, Tick ticks_per_quarter = kTicksPerQuarter);

}  // namespace chromanote
