// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chromanote/cli.h"
#include "chromanote/color.h"
#include "chromanote/harmony.h"
#include "chromanote/midi.h"
#include "chromanote/scriabin.h"
#include "support/harmony_oracle.h"
#include "support/histogram_oracle.h"
#include "support/image_writer.h"
#include "support/score_gen.h"
#include "support/smf_reader.h"

namespace fs = std::filesystem;
using namespace chromanote;

namespace {

constexpr double kPerformanceLimitSeconds = 5.0;
constexpr int kPerformanceRuns = 5;
constexpr int kTempoCorpusSize = 50;
constexpr double kHarmonyOracleLimitSeconds = 60.0;
constexpr int kRoundTripScores = 100;
constexpr int kHistogramGrids = 100;

struct Outcome {
  bool pass;
  std::string detail;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "chromanote_acceptance";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "chromanote");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  if (code != 0) std::cerr << "  cli: " << err.str();
  return code;
}

fs::path save_png(const std::string& name, const PixelGrid& g) {
  const fs::path p = work_dir() / name;
  test::write_bytes(p, test::encode_png(g));
  return p;
}

test::ParsedMidi convert(const fs::path& png, const std::string& stem, std::vector<std::string> flags = {}) {
  const fs::path mid = work_dir() / (stem + ".mid");
  std::vector<std::string> args = {png.string(), mid.string()};
  args.insert(args.end(), flags.begin(), flags.end());
  if (run_cli(args) != 0) throw std::runtime_error("conversion of " + png.string() + " failed");
  return test::parse_smf(test::read_bytes(mid));
}

std::set<int> pitch_classes(const test::ParsedMidi& midi) {
  std::set<int> out;
  for (const auto& n : midi.notes()) out.insert(n.key % 12);
  return out;
}

// A busy, painting-like 1920x1080 test card: hue sweeps, luminance bands and
// per-pixel noise.
PixelGrid full_hd_painting() {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> noise(-12, 12);
  std::vector<RgbPixel> px(1920 * 1080);
  for (std::size_t y = 0; y < 1080; ++y) {
    for (std::size_t x = 0; x < 1920; ++x) {
      const double h = std::fmod(x * 360.0 / 1920.0 + 40.0 * std::sin(y / 90.0), 360.0);
      const double l = 0.25 + 0.5 * (0.5 + 0.5 * std::sin(y / 70.0 + x / 400.0));
      const double s = 0.35 + 0.6 * (0.5 + 0.5 * std::cos(x / 130.0));
      auto channel = [&](double n) {
        const double k = std::fmod(n + h / 30.0, 12.0);
        const double a = s * std::min(l, 1.0 - l);
        const double v = l - a * std::max(-1.0, std::min({k - 3.0, 9.0 - k, 1.0}));
        return static_cast<std::uint8_t>(std::clamp(static_cast<int>(v * 255.0) + noise(rng), 0, 255));
      };
      px[y * 1920 + x] = {channel(0), channel(8), channel(4)};
    }
  }
  return PixelGrid(1920, 1080, std::move(px));
}

Outcome performance() {
  const fs::path png = save_png("full_hd.png", full_hd_painting());
  std::vector<double> seconds;
  for (int i = 0; i < kPerformanceRuns; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    const int code = run_cli({png.string(), (work_dir() / "full_hd.mid").string(), "--report",
                              (work_dir() / "full_hd.json").string()});
    const auto t1 = std::chrono::steady_clock::now();
    if (code != 0) return {false, "conversion failed"};
    seconds.push_back(std::chrono::duration<double>(t1 - t0).count());
  }
  std::sort(seconds.begin(), seconds.end());
  const double median = seconds[seconds.size() / 2];
  std::ostringstream d;
  d << std::fixed << std::setprecision(3) << "1920x1080 PNG, median of " << kPerformanceRuns << " runs " << median
    << " s (limit " << kPerformanceLimitSeconds << " s)";
  return {median <= kPerformanceLimitSeconds, d.str()};
}

Outcome determinism() {
  PixelGrid g = full_hd_painting();
  const fs::path png = save_png("det.png", downsize(g, 640));
  const std::vector<std::string> flags = {"--segments", "12", "--threshold", "0.04", "--triad", "120"};
  std::vector<std::vector<std::uint8_t>> mids, reports;
  for (int i = 0; i < 2; ++i) {
    const fs::path mid = work_dir() / ("det" + std::to_string(i) + ".mid");
    const fs::path rep = work_dir() / ("det" + std::to_string(i) + ".json");
    std::vector<std::string> args = {png.string(), mid.string(), "--report", rep.string()};
    args.insert(args.end(), flags.begin(), flags.end());
    if (run_cli(args) != 0) return {false, "conversion failed"};
    mids.push_back(test::read_bytes(mid));
    reports.push_back(test::read_bytes(rep));
  }
  const bool same = mids[0] == mids[1] && reports[0] == reports[1];
  return {same, same ? "two runs gave byte-identical .mid (" + std::to_string(mids[0].size()) +
                           " bytes) and report (" + std::to_string(reports[0].size()) + " bytes)"
                     : "outputs differ between runs"};
}

Outcome tempo_bounds() {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> channel(0, 255);
  std::uniform_int_distribution<std::size_t> dim(16, 200);
  std::size_t tempo_events = 0;
  double lo = 1e9, hi = 0;
  for (int i = 0; i < kTempoCorpusSize; ++i) {
    const std::size_t w = dim(rng), h = dim(rng);
    // Random rectangles of random colors over a random background.
    std::vector<RgbPixel> px(w * h, RgbPixel{static_cast<std::uint8_t>(channel(rng)),
                                             static_cast<std::uint8_t>(channel(rng)),
                                             static_cast<std::uint8_t>(channel(rng))});
    PixelGrid g(w, h, px);
    const int rects = std::uniform_int_distribution<int>(0, 12)(rng);
    for (int r = 0; r < rects; ++r) {
      const RgbPixel c{static_cast<std::uint8_t>(channel(rng)), static_cast<std::uint8_t>(channel(rng)),
                       static_cast<std::uint8_t>(channel(rng))};
      const std::size_t x0 = rng() % w, y0 = rng() % h;
      const std::size_t x1 = std::min(w, x0 + 1 + rng() % w), y1 = std::min(h, y0 + 1 + rng() % h);
      for (std::size_t y = y0; y < y1; ++y) {
        for (std::size_t x = x0; x < x1; ++x) g.at(x, y) = c;
      }
    }
    const auto segs = std::to_string(std::min<std::size_t>(w, 1 + rng() % 10));
    const auto midi = convert(save_png("tempo.png", g), "tempo", {"--segments", segs});
    for (const auto& t : midi.tempos()) {
      ++tempo_events;
      lo = std::min(lo, t.bpm());
      hi = std::max(hi, t.bpm());
    }
  }
  const bool corpus_ok = tempo_events > 0 && lo >= 75.0 && hi <= 160.0;

  // Gray pixels pass once the gray cutoff is 0; their mean saturation is 0.
  const auto gray = convert(save_png("gray.png", PixelGrid::filled(32, 32, {128, 128, 128})), "gray",
                            {"--segments", "4", "--gray-cutoff", "0"});
  const auto red = convert(save_png("sat.png", PixelGrid::filled(32, 32, {255, 0, 0})), "sat", {"--segments", "4"});
  auto all_at = [](const test::ParsedMidi& m, std::uint32_t micros) {
    const auto t = m.tempos();
    return !t.empty() && std::all_of(t.begin(), t.end(), [&](const auto& e) { return e.micros_per_quarter == micros; });
  };
  const bool gray_ok = all_at(gray, 800000) && !gray.notes().empty();
  const bool red_ok = all_at(red, 375000);

  std::ostringstream d;
  d << std::fixed << std::setprecision(2) << tempo_events << " tempo events over " << kTempoCorpusSize
    << " images in [" << lo << ", " << hi << "] bpm; desaturated " << (gray_ok ? "75" : "WRONG") << ", saturated "
    << (red_ok ? "160" : "WRONG");
  return {corpus_ok && gray_ok && red_ok, d.str()};
}

Outcome threshold_semantics() {
  const int blue_pc = MappingTable::scriabin()[hue_sector(240.0)].semitone();
  auto blue_notes = [&](int blue) {
    std::vector<RgbPixel> px(100, {255, 0, 0});
    for (int i = 0; i < blue; ++i) px[i * 7 % 100] = {0, 0, 255};
    const auto midi =
        convert(save_png("thr.png", PixelGrid(10, 10, px)), "thr" + std::to_string(blue), {"--segments", "1"});
    int n = 0;
    for (const auto& note : midi.notes()) n += note.key % 12 == blue_pc ? 1 : 0;
    return n;
  };
  const int at5 = blue_notes(5);
  const int at6 = blue_notes(6);
  return {at5 == 0 && at6 == 1, "5/100 blue -> " + std::to_string(at5) + " blue notes, 6/100 blue -> " +
                                    std::to_string(at6)};
}

Outcome scriabin_mapping() {
  const auto red = pitch_classes(convert(save_png("red.png", PixelGrid::filled(40, 40, {255, 0, 0})), "red"));
  const auto green = pitch_classes(convert(save_png("green.png", PixelGrid::filled(40, 40, {0, 255, 0})), "green"));
  const bool ok = red == std::set<int>{0} && green == std::set<int>{9};
  auto names = [](const std::set<int>& s) {
    std::string out;
    for (int p : s) out += std::string(out.empty() ? "" : ",") + std::string(PitchClass(p).name());
    return out.empty() ? std::string("none") : out;
  };
  return {ok, "solid red -> {" + names(red) + "}, solid green -> {" + names(green) + "}"};
}

Outcome minor_major() {
  // Left half: dark green / dark magenta; right half: the same hues bright.
  // Green leads 60/40 so its pitch is the chord root.
  PixelGrid g = PixelGrid::filled(100, 50, {});
  for (std::size_t y = 0; y < 50; ++y) {
    for (std::size_t x = 0; x < 100; ++x) {
      const bool lead = (x % 50) % 5 < 3;
      if (x < 50) {
        g.at(x, y) = lead ? RgbPixel{0, 100, 0} : RgbPixel{100, 0, 100};
      } else {
        g.at(x, y) = lead ? RgbPixel{100, 255, 100} : RgbPixel{255, 100, 255};
      }
    }
  }
  const auto midi = convert(save_png("minmaj.png", g), "minmaj", {"--segments", "2"});
  const auto tempos = midi.tempos();
  if (tempos.size() != 2) return {false, "expected two segments"};
  const std::uint32_t boundary = tempos[1].tick;

  struct Half {
    int root = -1;
    std::set<int> chord;
  };
  Half halves[2];
  for (const auto& n : midi.notes()) {
    Half& h = halves[n.start < boundary ? 0 : 1];
    if (n.key >= 60) {
      if (h.root < 0) h.root = n.key % 12;  // first melody note: best-ranked color
    } else {
      h.chord.insert(n.key % 12);
    }
  }
  const Half& left = halves[0];
  const Half& right = halves[1];
  const bool left_ok = !left.chord.empty() && (left.chord.count((left.root + 3) % 12) == 1 &&
                                              left.chord.count((left.root + 4) % 12) == 0);
  const bool right_ok = !right.chord.empty() && right.chord.count((right.root + 4) % 12) == 1;
  std::ostringstream d;
  d << "left chord " << (left.chord.empty() ? "none" : left.chord.count((left.root + 3) % 12) ? "minor" : "other")
    << ", right chord " << (right.chord.empty() ? "none" : right.chord.count((right.root + 4) % 12) ? "major" : "other");
  return {left_ok && right_ok, d.str()};
}

Outcome harmony_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(99);
  std::size_t cases = 0, mismatches = 0;
  for (unsigned mask = 0; mask < (1u << 12); ++mask) {
    if (__builtin_popcount(mask) > 4) continue;
    std::vector<int> members;
    for (int s = 0; s < 12; ++s) {
      if (mask & (1u << s)) members.push_back(s);
    }
    // Ascending, descending and two shuffled rankings of each subset.
    std::vector<std::vector<int>> orders = {members, {members.rbegin(), members.rend()}};
    for (int k = 0; k < 2; ++k) {
      orders.push_back(members);
      std::shuffle(orders.back().begin(), orders.back().end(), rng);
    }
    for (const auto& order : orders) {
      std::vector<SectorShare> ranked;
      for (int s : order) ranked.push_back({SectorIndex(s), 0.2});
      for (TriadConvention triad : {TriadConvention::kConsecutive60, TriadConvention::kStandard120}) {
        ++cases;
        if (detect_harmonies(ranked, triad) != test::oracle_detect(ranked, triad)) ++mismatches;
      }
    }
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream d;
  d << std::fixed << std::setprecision(3) << cases << " ranked subsets of size <= 4, " << mismatches
    << " mismatches, " << elapsed << " s (limit " << kHarmonyOracleLimitSeconds << " s)";
  return {mismatches == 0 && elapsed <= kHarmonyOracleLimitSeconds, d.str()};
}

Outcome smf_round_trip() {
  std::mt19937 rng(8);
  int score_failures = 0;
  for (int i = 0; i < kRoundTripScores; ++i) {
    const Score s = test::random_score(rng);
    try {
      const auto midi = test::parse_smf(serialize_score(s));
      if (midi.notes() != test::expected_notes(s) || midi.tempos() != test::expected_tempos(s) ||
          midi.end_of_track.size() != 1 || midi.end_of_track[0] != s.end_tick) {
        ++score_failures;
      }
    } catch (const std::exception&) {
      ++score_failures;
    }
  }

  int vlq_failures = 0;
  int vlq_cases = 0;
  auto check = [&](std::vector<std::uint8_t> bytes) {
    ++vlq_cases;
    std::size_t pos = 0;
    const auto v = test::read_vlq(bytes, pos);
    if (pos != bytes.size() || encode_vlq(v) != bytes) ++vlq_failures;
  };
  for (int b = 0; b < 0x80; ++b) check({static_cast<std::uint8_t>(b)});
  for (int b1 = 0x81; b1 <= 0xFF; ++b1) {
    for (int b2 = 0; b2 < 0x80; ++b2) check({static_cast<std::uint8_t>(b1), static_cast<std::uint8_t>(b2)});
  }
  return {score_failures == 0 && vlq_failures == 0,
          std::to_string(kRoundTripScores - score_failures) + "/" + std::to_string(kRoundTripScores) +
              " scores round-trip; " + std::to_string(vlq_cases - vlq_failures) + "/" + std::to_string(vlq_cases) +
              " one- and two-byte VLQs"};
}

Outcome histogram_oracle() {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> channel(0, 255);
  int failures = 0;
  for (int i = 0; i < kHistogramGrids; ++i) {
    std::vector<RgbPixel> px(32 * 32);
    for (auto& p : px) {
      p = {static_cast<std::uint8_t>(channel(rng)), static_cast<std::uint8_t>(channel(rng)),
           static_cast<std::uint8_t>(channel(rng))};
    }
    const PixelGrid g(32, 32, px);
    if (!test::histograms_identical(build_histogram(g, {}), test::naive_histogram(g, {}))) ++failures;
  }
  return {failures == 0, std::to_string(kHistogramGrids - failures) + "/" + std::to_string(kHistogramGrids) +
                             " random 32x32 grids bit-exact"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 performance", performance},
      {"AC2 determinism", determinism},
      {"AC3 tempo bounds", tempo_bounds},
      {"AC4 threshold semantics", threshold_semantics},
      {"AC5 scriabin mapping", scriabin_mapping},
      {"AC6 minor/major rule", minor_major},
      {"AC7 harmony oracle", harmony_oracle},
      {"AC8 SMF round-trip", smf_round_trip},
      {"AC9 histogram oracle", histogram_oracle},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << std::endl;
    failed += o.pass ? 0 : 1;
  }
  fs::remove_all(work_dir());
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " acceptance criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
