#include "chromanote/sequencer.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "chromanote/errors.h"

namespace chromanote {

namespace {

int round_half_up(double x) { return static_cast<int>(std::floor(x + 0.5)); }

}  // namespace

double quarter_notes(NoteValue v) {
  switch (v) {
    case NoteValue::kHalf: return 2.0;
    case NoteValue::kQuarter: return 1.0;
    case NoteValue::kEighth: return 0.5;
    case NoteValue::kSixteenth: return 0.25;
  }
  return 0.0;
}

Tick note_value_ticks(NoteValue v, Tick ticks_per_quarter) {
  switch (v) {
    case NoteValue::kHalf: return ticks_per_quarter * 2;
    case NoteValue::kQuarter: return ticks_per_quarter;
    case NoteValue::kEighth: return ticks_per_quarter / 2;
    case NoteValue::kSixteenth: return ticks_per_quarter / 4;
  }
  return 0;
}

std::string_view note_value_name(NoteValue v) {
  switch (v) {
    case NoteValue::kHalf: return "half";
    case NoteValue::kQuarter: return "quarter";
    case NoteValue::kEighth: return "eighth";
    case NoteValue::kSixteenth: return "sixteenth";
  }
  return "unknown";
}

Tick event_start(const ScoreEvent& e) {
  return std::visit([](const auto& ev) { return ev.start; }, e);
}

int tempo_for_segment(double mean_sat) {
  if (!(mean_sat >= 0.0 && mean_sat <= 1.0)) {
    throw std::invalid_argument("tempo_for_segment: saturation outside [0, 1]");
  }
  const double span = kMaxTempoBpm - kMinTempoBpm;
  return std::clamp(round_half_up(kMinTempoBpm + span * mean_sat), kMinTempoBpm, kMaxTempoBpm);
}

int velocity_for_sector(const HueHistogram& h, SectorIndex s, VelocitySource source) {
  const auto count = h.bin_count[s.value()];
  if (count == 0) throw EmptyBin("sector " + std::to_string(s.value()) + " holds no pixels");
  const double sum = source == VelocitySource::kSaturation ? h.bin_sat_sum[s.value()] : h.bin_lum_sum[s.value()];
  const double mean = sum / static_cast<double>(count);
  return std::clamp(round_half_up(32.0 + 95.0 * mean), 1, 127);
}

NoteValue duration_for_segment(std::size_t qualifying_count) {
  if (qualifying_count <= 2) return NoteValue::kHalf;
  if (qualifying_count <= 4) return NoteValue::kQuarter;
  if (qualifying_count <= 6) return NoteValue::kEighth;
  return NoteValue::kSixteenth;
}

SegmentAnalysis compose_segment(std::size_t index, const HueHistogram& histogram,
                                std::vector<SectorShare> qualifying, const MappingTable& table,
                                double image_mean_lum, const SequencerConfig& config) {
  SegmentAnalysis seg;
  seg.index = index;
  seg.histogram = histogram;
  seg.qualifying = std::move(qualifying);
  seg.tempo_bpm = tempo_for_segment(histogram.segment_mean_saturation);
  seg.note_value = duration_for_segment(seg.qualifying.size());

  if (seg.qualifying.empty()) {
    // Rest of one half note.
    seg.duration = note_value_ticks(NoteValue::kHalf, config.ticks_per_quarter);
    return seg;
  }

  const Tick step = note_value_ticks(seg.note_value, config.ticks_per_quarter);
  Tick t = 0;
  for (const SectorShare& q : seg.qualifying) {
    NoteEvent note;
    note.pitch = sector_to_pitch_class(q.sector, table);
    note.octave = kMelodyOctave;
    note.velocity = velocity_for_sector(histogram, q.sector, config.velocity_source);
    note.start = t;
    note.duration = step;
    seg.melody.push_back(note);
    t += step;
  }
  seg.duration = t;

  seg.harmonies = detect_harmonies(seg.qualifying, config.triad);
  if (!seg.harmonies.empty()) {
    seg.chord = apply_quality(chord_from_harmony(seg.harmonies.front(), seg.qualifying, table),
                              histogram.segment_mean_luminosity, image_mean_lum);

    // The chord takes the loudness of its best-ranked sector.
    const auto root_sector = std::find_if(seg.qualifying.begin(), seg.qualifying.end(), [&](const SectorShare& q) {
      const auto& members = seg.harmonies.front().members;
      return std::find(members.begin(), members.end(), q.sector) != members.end();
    });
    const int velocity = velocity_for_sector(histogram, root_sector->sector, config.velocity_source);

    // Chord tones sit in the octave below the melody so the two never share
    // a key.
    for (PitchClass p : seg.chord->members) {
      seg.chord_notes.push_back(NoteEvent{p, kChordOctave, velocity, 0, seg.duration});
    }
  }
  return seg;
}

Score compose_sequence(std::span<const SegmentAnalysis> segments, Tick ticks_per_quarter) {
  Score score;
  score.ticks_per_quarter = ticks_per_quarter;
  Tick offset = 0;
  for (const SegmentAnalysis& seg : segments) {
    score.events.emplace_back(TempoEvent{offset, seg.tempo_bpm});
    for (NoteEvent n : seg.chord_notes) {
      n.start += offset;
      score.events.emplace_back(n);
    }
    for (NoteEvent n : seg.melody) {
      n.start += offset;
      score.events.emplace_back(n);
    }
    offset += seg.duration;
  }
  std::stable_sort(score.events.begin(), score.events.end(),
                   [](const ScoreEvent& a, const ScoreEvent& b) { return event_start(a) < event_start(b); });
  score.end_tick = offset;
  return score;
}

}  // namespace chromanote
