/**
 * @file midi.h
 * @brief Standard MIDI File (format 0) serialization of a Score.
 *
 * Layout of the single track:
 *   - at tick 0: tempo, then Program Change 0 on channel 0
 *   - at every tick: Note-Offs, then tempo changes, then Note-Ons, each
 *     group in score order
 *   - End-of-Track at Score::end_tick
 * Every status byte is written out (no running status) and Note-Off is
 * always 0x80 with release velocity 0.
 */

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "chromanote/sequencer.h"

namespace chromanote {

using MidiBytes = std::vector<std::uint8_t>;

inline constexpr std::uint32_t kMaxVlq = (1u << 28) - 1;
inline constexpr std::uint8_t kMidiChannel = 0;
inline constexpr std::uint8_t kMidiProgram = 0;

/// Big-endian 7-bit groups, continuation bit on all but the last byte.
/// Throws ValueTooLarge for values >= 2^28.
std::vector<std::uint8_t> encode_vlq(std::uint32_t value);

/// FF 51 03 followed by round(60,000,000 / bpm) as 24-bit big endian.
std::array<std::uint8_t, 6> tempo_meta_bytes(double bpm);

/// Throws NoteOutOfRange when a note's key falls outside [0, 127].
MidiBytes serialize_score(const Score& score);

/// Throws WriteFailure.
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace chromanote
