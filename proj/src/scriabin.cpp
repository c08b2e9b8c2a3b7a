#include "chromanote/scriabin.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "chromanote/errors.h"
#include "scriabin_table_data.h"  // generated from data/scriabin.table

namespace chromanote {

namespace {

constexpr std::array<std::string_view, 12> kPitchNames = {"C",  "C#", "D",  "Eb", "E",  "F",
                                                          "F#", "G",  "Ab", "A",  "Bb", "B"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

PitchClass::PitchClass(int semitone) : semitone_(semitone) {
  if (semitone < 0 || semitone > 11) {
    throw std::out_of_range("pitch class " + std::to_string(semitone) + " outside [0, 11]");
  }
}

PitchClass PitchClass::transposed(int semitones) const {
  return PitchClass(((semitone_ + semitones) % 12 + 12) % 12);
}

std::string_view PitchClass::name() const { return kPitchNames[semitone_]; }

PitchClass PitchClass::parse(std::string_view name) {
  name = trim(name);
  if (name.empty()) throw ConfigError("empty pitch class name");

  int base;
  switch (name.front()) {
    case 'C': base = 0; break;
    case 'D': base = 2; break;
    case 'E': base = 4; break;
    case 'F': base = 5; break;
    case 'G': base = 7; break;
    case 'A': base = 9; break;
    case 'B': base = 11; break;
    default: throw ConfigError("unknown pitch class '" + std::string(name) + "'");
  }
  if (name.size() == 1) return PitchClass(base);
  if (name.size() == 2 && name[1] == '#') return PitchClass(base).transposed(1);
  if (name.size() == 2 && name[1] == 'b') return PitchClass(base).transposed(-1);
  throw ConfigError("unknown pitch class '" + std::string(name) + "'");
}

MappingTable::MappingTable(const std::array<PitchClass, kSectorCount>& entries) : entries_(entries) {
  std::array<bool, 12> seen{};
  for (PitchClass p : entries_) {
    if (seen[p.semitone()]) {
      throw ConfigError("mapping table assigns " + std::string(p.name()) + " to more than one sector");
    }
    seen[p.semitone()] = true;
  }
}

const MappingTable& MappingTable::scriabin() {
  static const MappingTable table = parse(kScriabinTableText);
  return table;
}

MappingTable MappingTable::parse(std::string_view text) {
  std::array<std::optional<PitchClass>, kSectorCount> slots;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    // A comment starts at a '#' that opens the line or follows whitespace, so
    // sharps such as "F#" survive.
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '#' && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t')) {
        line = line.substr(0, i);
        break;
      }
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto space = line.find_first_of(" \t");
    if (space == std::string_view::npos) {
      throw ConfigError("mapping table line " + std::to_string(line_no) + ": expected 'sector pitch'");
    }
    const std::string_view index_text = line.substr(0, space);
    int index = -1;
    const auto [ptr, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
    if (ec != std::errc{} || ptr != index_text.data() + index_text.size() || index < 0 || index >= kSectorCount) {
      throw ConfigError("mapping table line " + std::to_string(line_no) + ": bad sector index '" +
                        std::string(index_text) + "'");
    }
    if (slots[index]) {
      throw ConfigError("mapping table line " + std::to_string(line_no) + ": sector " + std::to_string(index) +
                        " listed twice");
    }
    slots[index] = PitchClass::parse(line.substr(space + 1));
  }

  std::array<PitchClass, kSectorCount> entries;
  for (int s = 0; s < kSectorCount; ++s) {
    if (!slots[s]) throw ConfigError("mapping table is missing sector " + std::to_string(s));
    entries[s] = *slots[s];
  }
  return MappingTable(entries);
}

MappingTable MappingTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open mapping table '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::string_view quality_name(ChordQuality q) {
  switch (q) {
    case ChordQuality::kUnset: return "unset";
    case ChordQuality::kMajor: return "major";
    case ChordQuality::kMinor: return "minor";
  }
  return "unknown";
}

PitchClass sector_to_pitch_class(SectorIndex s, const MappingTable& table) { return table[s]; }

Chord chord_from_harmony(const Harmony& h, std::span<const SectorShare> ranked, const MappingTable& table) {
  std::vector<SectorIndex> by_rank;
  for (const SectorShare& entry : ranked) {
    if (std::find(h.members.begin(), h.members.end(), entry.sector) != h.members.end()) {
      by_rank.push_back(entry.sector);
    }
  }
  if (by_rank.empty() || by_rank.size() != h.members.size()) {
    throw std::invalid_argument("chord_from_harmony: harmony members must all be qualifying sectors");
  }

  Chord chord;
  chord.root = table[by_rank.front()];
  for (SectorIndex s : by_rank) {
    const PitchClass p = table[s];
    if (std::find(chord.members.begin(), chord.members.end(), p) == chord.members.end()) {
      chord.members.push_back(p);
    }
  }
  return chord;
}

Chord apply_quality(Chord c, double segment_mean_lum, double image_mean_lum) {
  if (c.quality != ChordQuality::kUnset) throw std::invalid_argument("apply_quality: chord quality already set");
  c.quality = segment_mean_lum < image_mean_lum ? ChordQuality::kMinor : ChordQuality::kMajor;
  const PitchClass third = c.root.transposed(c.quality == ChordQuality::kMinor ? 3 : 4);
  if (std::find(c.members.begin(), c.members.end(), third) == c.members.end()) c.members.push_back(third);
  return c;
}

}  // namespace chromanote
