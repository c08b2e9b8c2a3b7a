// Per-pixel reference for build_histogram.

#pragma once

#include <cmath>

#include "chromanote/color.h"

namespace chromanote::test {

inline HueHistogram naive_histogram(const PixelGrid& g, const FilterThresholds& t) {
  HueHistogram h;
  double lum_total = 0.0;
  double sat_total = 0.0;
  for (std::size_t y = 0; y < g.height(); ++y) {
    for (std::size_t x = 0; x < g.width(); ++x) {
      const ConeColor c = rgb_to_cone(g.at(x, y));
      lum_total += c.luminosity;
      ++h.total_pixels;
      const bool keep = c.luminosity >= t.dark_cutoff && c.luminosity <= t.bright_cutoff &&
                        c.saturation >= t.gray_cutoff;
      if (!keep) continue;
      double shifted = c.hue + 15.0;
      if (shifted >= 360.0) shifted -= 360.0;
      const int bin = static_cast<int>(shifted / 30.0);
      h.bin_count[bin] += 1;
      h.bin_sat_sum[bin] += c.saturation;
      h.bin_lum_sum[bin] += c.luminosity;
      h.total_counted += 1;
      sat_total += c.saturation;
    }
  }
  h.segment_mean_luminosity = lum_total / static_cast<double>(h.total_pixels);
  h.segment_mean_saturation = h.total_counted ? sat_total / static_cast<double>(h.total_counted) : 0.0;
  return h;
}

/// Counts and per-bin accumulators bit-exact; means within 1e-12 (the
/// reference sums luminosity in floating point).
inline bool histograms_identical(const HueHistogram& a, const HueHistogram& b) {
  return a.bin_count == b.bin_count && a.bin_sat_sum == b.bin_sat_sum && a.bin_lum_sum == b.bin_lum_sum &&
         a.total_counted == b.total_counted && a.total_pixels == b.total_pixels &&
         std::abs(a.segment_mean_luminosity - b.segment_mean_luminosity) <= 1e-12 &&
         std::abs(a.segment_mean_saturation - b.segment_mean_saturation) <= 1e-12;
}

}  // namespace chromanote::test
