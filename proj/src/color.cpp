#include "chromanote/color.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "chromanote/errors.h"

namespace chromanote {

SectorIndex::SectorIndex(int index) : index_(index) {
  if (index < 0 || index >= kSectorCount) {
    throw std::out_of_range("sector index " + std::to_string(index) + " outside [0, 11]");
  }
}

SectorIndex SectorIndex::rotated(int steps) const {
  return SectorIndex(((index_ + steps) % kSectorCount + kSectorCount) % kSectorCount);
}

void FilterThresholds::validate() const {
  if (!(dark_cutoff >= 0.0 && dark_cutoff < bright_cutoff && bright_cutoff <= 1.0)) {
    throw ConfigError("filter thresholds must satisfy 0 <= dark < bright <= 1");
  }
  if (!(gray_cutoff >= 0.0 && gray_cutoff < 1.0)) {
    throw ConfigError("gray cutoff must lie in [0, 1)");
  }
}

ConeColor rgb_to_cone(RgbPixel p) {
  const int hi = std::max({p.r, p.g, p.b});
  const int lo = std::min({p.r, p.g, p.b});
  const int sum = hi + lo;
  const int delta = hi - lo;

  ConeColor c;
  c.luminosity = sum / 510.0;
  if (delta == 0) return c;

  // Lightness at or below one half uses (max + min) as the denominator.
  c.saturation = static_cast<double>(delta) / (sum <= 255 ? sum : 510 - sum);

  double hue;
  if (hi == p.r) {
    hue = 60.0 * (p.g - p.b) / delta;
  } else if (hi == p.g) {
    hue = 60.0 * (p.b - p.r) / delta + 120.0;
  } else {
    hue = 60.0 * (p.r - p.g) / delta + 240.0;
  }
  if (hue < 0.0) hue += 360.0;
  c.hue = hue;
  return c;
}

bool passes_filter(const ConeColor& c, const FilterThresholds& t) {
  return c.luminosity >= t.dark_cutoff && c.luminosity <= t.bright_cutoff && c.saturation >= t.gray_cutoff;
}

SectorIndex hue_sector(double hue) {
  double h = std::fmod(hue, 360.0);
  if (h < 0.0) h += 360.0;
  int index = static_cast<int>(std::floor((h + kSectorWidthDegrees / 2.0) / kSectorWidthDegrees));
  // The addition can round across a boundary; the boundaries themselves are
  // exact, so settle against them directly.
  if (h < kSectorWidthDegrees * index - kSectorWidthDegrees / 2.0) --index;
  if (h >= kSectorWidthDegrees * (index + 1) - kSectorWidthDegrees / 2.0) ++index;
  return SectorIndex(((index % kSectorCount) + kSectorCount) % kSectorCount);
}

HueHistogram build_histogram(const PixelGrid& segment, const FilterThresholds& t) {
  HueHistogram h;
  h.total_pixels = segment.size();

  // Luminosity is (max + min) / 510, so the segment mean is taken from the
  // exact integer sum.
  std::uint64_t lum_numerator = 0;
  double sat_sum = 0.0;
  for (const RgbPixel& p : segment.pixels()) {
    lum_numerator += static_cast<std::uint64_t>(std::max({p.r, p.g, p.b})) + std::min({p.r, p.g, p.b});
    const ConeColor c = rgb_to_cone(p);
    if (!passes_filter(c, t)) continue;
    const int bin = hue_sector(c.hue).value();
    ++h.bin_count[bin];
    h.bin_sat_sum[bin] += c.saturation;
    h.bin_lum_sum[bin] += c.luminosity;
    ++h.total_counted;
    sat_sum += c.saturation;
  }
  h.segment_mean_luminosity =
      static_cast<double>(lum_numerator) / (510.0 * static_cast<double>(h.total_pixels));
  h.segment_mean_saturation = h.total_counted == 0 ? 0.0 : sat_sum / static_cast<double>(h.total_counted);
  return h;
}

std::vector<SectorShare> qualifying_sectors(const HueHistogram& h, double threshold) {
  if (!(threshold >= 0.0 && threshold < 1.0)) {
    throw std::invalid_argument("qualifying threshold must lie in [0, 1)");
  }
  if (h.total_counted == 0) throw EmptySegment("no pixel in the segment survived the filter");

  std::vector<SectorShare> out;
  const auto total = static_cast<double>(h.total_counted);
  for (int s = 0; s < kSectorCount; ++s) {
    const double share = static_cast<double>(h.bin_count[s]) / total;
    if (share > threshold) out.push_back({SectorIndex(s), share});
  }
  std::stable_sort(out.begin(), out.end(), [&h](const SectorShare& a, const SectorShare& b) {
    return h.bin_count[a.sector.value()] > h.bin_count[b.sector.value()];
  });
  return out;
}

}  // namespace chromanote
