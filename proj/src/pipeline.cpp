#include "chromanote/pipeline.h"

#include <algorithm>

#include "chromanote/errors.h"

namespace chromanote {

void PipelineOptions::validate() const {
  if (max_dim < 1) throw ConfigError("max-dim must be at least 1");
  if (n_segments < 1) throw ConfigError("segments must be at least 1");
  if (!(threshold >= 0.0 && threshold < 1.0)) throw ConfigError("threshold must lie in [0, 1)");
  filter.validate();
}

double mean_luminosity(const PixelGrid& grid) {
  std::uint64_t sum = 0;
  for (const RgbPixel& p : grid.pixels()) {
    sum += static_cast<std::uint64_t>(std::max({p.r, p.g, p.b})) + std::min({p.r, p.g, p.b});
  }
  return static_cast<double>(sum) / (510.0 * static_cast<double>(grid.size()));
}

ImageAnalysis analyze_image(const PixelGrid& image, const PipelineOptions& options, const MappingTable& table) {
  options.validate();

  ImageAnalysis result;
  result.original_width = image.width();
  result.original_height = image.height();

  const PixelGrid small = downsize(image, options.max_dim);
  result.width = small.width();
  result.height = small.height();
  result.image_mean_luminosity = mean_luminosity(small);

  const std::vector<PixelGrid> strips = split_segments(small, options.n_segments);
  const SequencerConfig seq_config{options.velocity_source, options.triad, kTicksPerQuarter};

  result.segments.reserve(strips.size());
  for (std::size_t i = 0; i < strips.size(); ++i) {
    const HueHistogram histogram = build_histogram(strips[i], options.filter);
    std::vector<SectorShare> qualifying;
    if (histogram.total_counted > 0) qualifying = qualifying_sectors(histogram, options.threshold);
    result.segments.push_back(
        compose_segment(i, histogram, std::move(qualifying), table, result.image_mean_luminosity, seq_config));
  }
  result.score = compose_sequence(result.segments, kTicksPerQuarter);
  return result;
}

}  // namespace chromanote
