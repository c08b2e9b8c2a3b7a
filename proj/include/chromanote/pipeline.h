/**
 * @file pipeline.h
 * @brief End-to-end image analysis: downsize, segment, histogram, qualify,
 *        compose.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "chromanote/color.h"
#include "chromanote/image.h"
#include "chromanote/scriabin.h"
#include "chromanote/sequencer.h"

namespace chromanote {

struct PipelineOptions {
  std::size_t max_dim = kDefaultMaxDim;
  std::size_t n_segments = kDefaultSegments;
  double threshold = kDefaultQualifyThreshold;
  FilterThresholds filter;
  VelocitySource velocity_source = VelocitySource::kSaturation;
  TriadConvention triad = TriadConvention::kConsecutive60;

  /// Throws ConfigError on any out-of-range field.
  void validate() const;
};

struct ImageAnalysis {
  std::size_t original_width = 0;
  std::size_t original_height = 0;
  std::size_t width = 0;
  std::size_t height = 0;
  /// Mean luminosity of every pixel of the downsized image.
  double image_mean_luminosity = 0.0;
  std::vector<SegmentAnalysis> segments;
  Score score;
};

double mean_luminosity(const PixelGrid& grid);

/// Throws ConfigError for invalid options and TooManySegments when the
/// downsized image is narrower than the segment count.
ImageAnalysis analyze_image(const PixelGrid& image, const PipelineOptions& options,
                            const MappingTable& table = MappingTable::scriabin());

}  // namespace chromanote
