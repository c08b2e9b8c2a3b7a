#include "chromanote/report.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

#include "chromanote/errors.h"

namespace chromanote {

namespace {

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string quoted(std::string_view s) { return "\"" + std::string(s) + "\""; }

template <typename Range, typename Format>
std::string inline_array(const Range& items, Format format) {
  std::string out = "[";
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += ", ";
    out += format(item);
    first = false;
  }
  return out + "]";
}

void write_segment(std::ostringstream& out, const SegmentAnalysis& seg, Tick start) {
  const HueHistogram& h = seg.histogram;
  out << "    {\n"
      << "      \"index\": " << seg.index << ",\n"
      << "      \"start_tick\": " << start << ",\n"
      << "      \"duration_ticks\": " << seg.duration << ",\n"
      << "      \"silence\": " << (seg.silent() ? "true" : "false") << ",\n"
      << "      \"total_pixels\": " << h.total_pixels << ",\n"
      << "      \"counted_pixels\": " << h.total_counted << ",\n"
      << "      \"mean_luminosity\": " << fixed4(h.segment_mean_luminosity) << ",\n"
      << "      \"mean_saturation\": " << fixed4(h.segment_mean_saturation) << ",\n"
      << "      \"sector_counts\": " << inline_array(h.bin_count, [](auto c) { return std::to_string(c); }) << ",\n"
      << "      \"qualifying\": " << inline_array(seg.qualifying, [](const SectorShare& q) {
           return "[" + std::to_string(q.sector.value()) + ", " + fixed4(q.share) + "]";
         }) << ",\n"
      << "      \"harmonies\": " << inline_array(seg.harmonies, [](const Harmony& hm) {
           return "{\"class\": " + quoted(harmony_name(hm.kind)) + ", \"sectors\": " +
                  inline_array(hm.members, [](SectorIndex s) { return std::to_string(s.value()); }) + "}";
         }) << ",\n"
      << "      \"tempo_bpm\": " << seg.tempo_bpm << ",\n"
      << "      \"note_value\": " << quoted(note_value_name(seg.note_value)) << ",\n";

  out << "      \"chord\": ";
  if (seg.chord) {
    const Chord& c = *seg.chord;
    out << "{\"root\": " << quoted(c.root.name()) << ", \"quality\": " << quoted(quality_name(c.quality))
        << ", \"members\": " << inline_array(c.members, [](PitchClass p) { return quoted(p.name()); })
        << ", \"keys\": " << inline_array(seg.chord_notes, [](const NoteEvent& n) { return std::to_string(n.key()); })
        << ", \"velocity\": " << (seg.chord_notes.empty() ? 0 : seg.chord_notes.front().velocity) << "}";
  } else {
    out << "null";
  }
  out << ",\n";

  out << "      \"melody\": [";
  for (std::size_t i = 0; i < seg.melody.size(); ++i) {
    const NoteEvent& n = seg.melody[i];
    out << (i == 0 ? "\n" : ",\n") << "        {\"pitch\": " << quoted(n.pitch.name()) << ", \"key\": " << n.key()
        << ", \"velocity\": " << n.velocity << ", \"start\": " << (start + n.start)
        << ", \"duration\": " << n.duration << "}";
  }
  out << (seg.melody.empty() ? "]\n" : "\n      ]\n");
  out << "    }";
}

}  // namespace

std::string emit_report(const ImageAnalysis& analysis) {
  std::ostringstream out;
  out << "{\n"
      << "  \"image\": {\n"
      << "    \"original_width\": " << analysis.original_width << ",\n"
      << "    \"original_height\": " << analysis.original_height << ",\n"
      << "    \"width\": " << analysis.width << ",\n"
      << "    \"height\": " << analysis.height << ",\n"
      << "    \"mean_luminosity\": " << fixed4(analysis.image_mean_luminosity) << "\n"
      << "  },\n"
      << "  \"ticks_per_quarter\": " << analysis.score.ticks_per_quarter << ",\n"
      << "  \"total_ticks\": " << analysis.score.end_tick << ",\n"
      << "  \"segments\": [";
  Tick start = 0;
  for (std::size_t i = 0; i < analysis.segments.size(); ++i) {
    out << (i == 0 ? "\n" : ",\n");
    write_segment(out, analysis.segments[i], start);
    start += analysis.segments[i].duration;
  }
  out << (analysis.segments.empty() ? "]\n" : "\n  ]\n") << "}\n";
  return out.str();
}

void write_report(const std::filesystem::path& path, const ImageAnalysis& analysis) {
  const std::string text = emit_report(analysis);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw WriteFailure("cannot open '" + path.string() + "' for writing");
  out << text;
  out.close();
  if (!out) throw WriteFailure("failed writing '" + path.string() + "'");
}

}  // namespace chromanote
