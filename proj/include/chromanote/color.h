/**
 * @file color.h
 * @brief Hue/saturation/luminosity cone, pixel filtering and 12-sector hue
 *        histograms.
 */

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "chromanote/image.h"

namespace chromanote {

/// A pixel in the hue/saturation/luminosity cone.
/// hue in [0, 360) degrees, saturation and luminosity in [0, 1].
/// Achromatic colors carry hue 0.
struct ConeColor {
  double hue = 0.0;
  double saturation = 0.0;
  double luminosity = 0.0;
};

inline constexpr int kSectorCount = 12;
inline constexpr double kSectorWidthDegrees = 360.0 / kSectorCount;

/// One of the 12 equal 30-degree arcs of the hue circle. Sector 0 is
/// centered on red (0 degrees).
class SectorIndex {
 public:
  constexpr SectorIndex() = default;
  /// Throws std::out_of_range outside [0, 11].
  explicit SectorIndex(int index);

  constexpr int value() const { return index_; }

  /// Sector `steps` positions around the circle (negative steps allowed).
  SectorIndex rotated(int steps) const;

  friend constexpr auto operator<=>(SectorIndex, SectorIndex) = default;

 private:
  int index_ = 0;
};

struct FilterThresholds {
  double dark_cutoff = 0.08;
  double bright_cutoff = 0.92;
  double gray_cutoff = 0.05;

  /// Throws ConfigError unless 0 <= dark < bright <= 1 and gray in [0, 1).
  void validate() const;
};

/// Per-segment sector statistics.
struct HueHistogram {
  std::array<std::uint64_t, kSectorCount> bin_count{};
  std::array<double, kSectorCount> bin_sat_sum{};
  std::array<double, kSectorCount> bin_lum_sum{};
  /// Pixels that passed the filter.
  std::uint64_t total_counted = 0;
  /// Every pixel in the segment, filtered or not.
  std::uint64_t total_pixels = 0;
  /// Mean luminosity over all segment pixels.
  double segment_mean_luminosity = 0.0;
  /// Mean saturation over pixels that passed the filter; 0 if none did.
  double segment_mean_saturation = 0.0;
};

struct SectorShare {
  SectorIndex sector;
  double share = 0.0;

  friend bool operator==(const SectorShare&, const SectorShare&) = default;
};

inline constexpr double kDefaultQualifyThreshold = 0.05;

ConeColor rgb_to_cone(RgbPixel p);

bool passes_filter(const ConeColor& c, const FilterThresholds& t);

/// floor(((hue + 15) mod 360) / 30). Hue must lie in [0, 360).
SectorIndex hue_sector(double hue);

HueHistogram build_histogram(const PixelGrid& segment, const FilterThresholds& t);

/// Sectors whose share of filtered pixels is strictly greater than
/// `threshold`, by descending count (ties: ascending sector index).
/// Throws EmptySegment if no pixel survived the filter.
std::vector<SectorShare> qualifying_sectors(const HueHistogram& h, double threshold);

}  // namespace chromanote
