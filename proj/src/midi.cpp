#include "chromanote/midi.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

#include "chromanote/errors.h"

namespace chromanote {

namespace {

// Sort order of messages that share a tick.
enum class Slot { kNoteOff = 0, kTempo = 1, kProgram = 2, kNoteOn = 3 };

struct TimedMessage {
  Tick tick;
  Slot slot;
  std::size_t order;
  std::vector<std::uint8_t> bytes;
};

void put_u32(MidiBytes& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

void put_u16(MidiBytes& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

}  // namespace

std::vector<std::uint8_t> encode_vlq(std::uint32_t value) {
  if (value > kMaxVlq) throw ValueTooLarge("VLQ value " + std::to_string(value) + " does not fit in 28 bits");
  std::vector<std::uint8_t> out;
  out.push_back(static_cast<std::uint8_t>(value & 0x7F));
  value >>= 7;
  while (value > 0) {
    out.push_back(static_cast<std::uint8_t>((value & 0x7F) | 0x80));
    value >>= 7;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::array<std::uint8_t, 6> tempo_meta_bytes(double bpm) {
  if (!(bpm > 0.0)) throw std::invalid_argument("tempo must be positive");
  const double micros = std::floor(60'000'000.0 / bpm + 0.5);
  if (micros > 0xFFFFFF) throw ValueTooLarge("tempo too slow for a 24-bit microsecond field");
  const auto us = static_cast<std::uint32_t>(micros);
  return {0xFF, 0x51, 0x03, static_cast<std::uint8_t>(us >> 16), static_cast<std::uint8_t>(us >> 8),
          static_cast<std::uint8_t>(us)};
}

MidiBytes serialize_score(const Score& score) {
  if (score.ticks_per_quarter == 0 || score.ticks_per_quarter > 0x7FFF) {
    throw std::invalid_argument("ticks per quarter must lie in [1, 32767]");
  }

  std::vector<TimedMessage> messages;
  std::size_t order = 0;
  if (!score.events.empty()) {
    messages.push_back({0, Slot::kProgram, order++,
                        {static_cast<std::uint8_t>(0xC0 | kMidiChannel), kMidiProgram}});
  }
  for (const ScoreEvent& event : score.events) {
    if (const auto* tempo = std::get_if<TempoEvent>(&event)) {
      const auto meta = tempo_meta_bytes(tempo->bpm);
      messages.push_back({tempo->start, Slot::kTempo, order++, {meta.begin(), meta.end()}});
      continue;
    }
    const auto& note = std::get<NoteEvent>(event);
    const int key = note.key();
    if (key < 0 || key > 127) {
      throw NoteOutOfRange("note key " + std::to_string(key) + " outside [0, 127]");
    }
    if (note.velocity < 1 || note.velocity > 127) {
      throw std::invalid_argument("note velocity " + std::to_string(note.velocity) + " outside [1, 127]");
    }
    if (note.duration == 0) throw std::invalid_argument("note duration must be positive");
    const auto k = static_cast<std::uint8_t>(key);
    messages.push_back({note.start, Slot::kNoteOn, order++,
                        {static_cast<std::uint8_t>(0x90 | kMidiChannel), k, static_cast<std::uint8_t>(note.velocity)}});
    messages.push_back({note.end(), Slot::kNoteOff, order++, {static_cast<std::uint8_t>(0x80 | kMidiChannel), k, 0}});
  }
  std::sort(messages.begin(), messages.end(), [](const TimedMessage& a, const TimedMessage& b) {
    if (a.tick != b.tick) return a.tick < b.tick;
    if (a.slot != b.slot) return a.slot < b.slot;
    return a.order < b.order;
  });

  MidiBytes track;
  Tick now = 0;
  for (const TimedMessage& m : messages) {
    const auto delta = encode_vlq(m.tick - now);
    track.insert(track.end(), delta.begin(), delta.end());
    track.insert(track.end(), m.bytes.begin(), m.bytes.end());
    now = m.tick;
  }
  const auto tail = encode_vlq(std::max(score.end_tick, now) - now);
  track.insert(track.end(), tail.begin(), tail.end());
  track.insert(track.end(), {0xFF, 0x2F, 0x00});

  MidiBytes out;
  out.reserve(22 + track.size());
  out.insert(out.end(), {'M', 'T', 'h', 'd'});
  put_u32(out, 6);
  put_u16(out, 0);  // format 0
  put_u16(out, 1);  // one track
  put_u16(out, static_cast<std::uint16_t>(score.ticks_per_quarter));
  out.insert(out.end(), {'M', 'T', 'r', 'k'});
  put_u32(out, static_cast<std::uint32_t>(track.size()));
  out.insert(out.end(), track.begin(), track.end());
  return out;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw WriteFailure("cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw WriteFailure("failed writing '" + path.string() + "'");
}

}  // namespace chromanote
