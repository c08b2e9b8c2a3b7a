#include "smf_reader.h"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

namespace chromanote::test {

namespace {

std::uint32_t be(std::span<const std::uint8_t> bytes, std::size_t pos, int n) {
  if (pos + n > bytes.size()) throw SmfError("truncated integer");
  std::uint32_t v = 0;
  for (int i = 0; i < n; ++i) v = (v << 8) | bytes[pos + i];
  return v;
}

int data_bytes_for(std::uint8_t status) {
  switch (status & 0xF0) {
    case 0xC0:
    case 0xD0:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

std::uint32_t read_vlq(std::span<const std::uint8_t> bytes, std::size_t& pos) {
  std::uint32_t value = 0;
  for (int i = 0; i < 4; ++i) {
    if (pos >= bytes.size()) throw SmfError("truncated VLQ");
    const std::uint8_t b = bytes[pos++];
    value = (value << 7) | (b & 0x7F);
    if ((b & 0x80) == 0) return value;
  }
  throw SmfError("VLQ longer than 4 bytes");
}

ParsedMidi parse_smf(std::span<const std::uint8_t> bytes) {
  ParsedMidi midi;
  if (bytes.size() < 14 || !std::equal(bytes.begin(), bytes.begin() + 4, "MThd")) {
    throw SmfError("missing MThd");
  }
  const std::uint32_t header_len = be(bytes, 4, 4);
  if (header_len < 6) throw SmfError("short header");
  midi.format = static_cast<int>(be(bytes, 8, 2));
  midi.track_count = static_cast<int>(be(bytes, 10, 2));
  midi.division = static_cast<int>(be(bytes, 12, 2));

  std::size_t pos = 8 + header_len;
  for (int t = 0; t < midi.track_count; ++t) {
    if (pos + 8 > bytes.size() || !std::equal(bytes.begin() + pos, bytes.begin() + pos + 4, "MTrk")) {
      throw SmfError("missing MTrk");
    }
    const std::uint32_t len = be(bytes, pos + 4, 4);
    std::size_t p = pos + 8;
    const std::size_t end = p + len;
    if (end > bytes.size()) throw SmfError("track length exceeds file");

    std::vector<RawEvent> events;
    std::uint32_t tick = 0;
    std::uint8_t running = 0;
    bool saw_eot = false;
    const auto track = bytes.subspan(0, end);
    while (p < end) {
      tick += read_vlq(track, p);
      if (p >= end) throw SmfError("event without status");
      RawEvent ev;
      ev.tick = tick;
      std::uint8_t status = track[p];
      if (status & 0x80) {
        ++p;
      } else {
        if (running == 0) throw SmfError("running status without prior status");
        status = running;
      }
      ev.status = status;
      if (status == 0xFF) {
        if (p >= end) throw SmfError("truncated meta");
        ev.meta_type = track[p++];
        const std::uint32_t n = read_vlq(track, p);
        if (p + n > end) throw SmfError("truncated meta payload");
        ev.data.assign(track.begin() + p, track.begin() + p + n);
        p += n;
        running = 0;
        if (ev.meta_type == 0x2F) {
          saw_eot = true;
          midi.end_of_track.push_back(tick);
          events.push_back(std::move(ev));
          break;
        }
      } else if (status == 0xF0 || status == 0xF7) {
        const std::uint32_t n = read_vlq(track, p);
        if (p + n > end) throw SmfError("truncated sysex");
        ev.data.assign(track.begin() + p, track.begin() + p + n);
        p += n;
        running = 0;
      } else {
        const int n = data_bytes_for(status);
        if (p + n > end) throw SmfError("truncated channel message");
        ev.data.assign(track.begin() + p, track.begin() + p + n);
        p += n;
        running = status;
      }
      events.push_back(std::move(ev));
    }
    if (!saw_eot) throw SmfError("track without End-of-Track");
    if (p != end) throw SmfError("data after End-of-Track");
    midi.tracks.push_back(std::move(events));
    pos = end;
  }
  return midi;
}

std::vector<ParsedNote> ParsedMidi::notes() const {
  std::vector<ParsedNote> out;
  for (const auto& track : tracks) {
    std::map<std::pair<int, int>, std::deque<ParsedNote>> open;
    for (const RawEvent& ev : track) {
      const int kind = ev.status & 0xF0;
      const int channel = ev.status & 0x0F;
      if (kind == 0x90 && ev.data[1] > 0) {
        open[{channel, ev.data[0]}].push_back({channel, ev.data[0], ev.data[1], ev.tick, ev.tick});
      } else if (kind == 0x80 || (kind == 0x90 && ev.data[1] == 0)) {
        auto& queue = open[{channel, ev.data[0]}];
        if (queue.empty()) throw SmfError("Note-Off without Note-On");
        ParsedNote n = queue.front();
        queue.pop_front();
        n.end = ev.tick;
        out.push_back(n);
      }
    }
    for (const auto& [key, queue] : open) {
      if (!queue.empty()) throw SmfError("Note-On never released");
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const ParsedNote& a, const ParsedNote& b) {
    return a.start != b.start ? a.start < b.start : a.key < b.key;
  });
  return out;
}

std::vector<ParsedTempo> ParsedMidi::tempos() const {
  std::vector<ParsedTempo> out;
  for (const auto& track : tracks) {
    for (const RawEvent& ev : track) {
      if (ev.status == 0xFF && ev.meta_type == 0x51) {
        if (ev.data.size() != 3) throw SmfError("tempo meta with wrong length");
        out.push_back({ev.tick, (std::uint32_t{ev.data[0]} << 16) | (std::uint32_t{ev.data[1]} << 8) | ev.data[2]});
      }
    }
  }
  return out;
}

}  // namespace chromanote::test
