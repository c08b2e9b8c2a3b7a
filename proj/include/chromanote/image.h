/**
 * @file image.h
 * @brief Raster decoding, box-filter downsizing and vertical segmentation.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace chromanote {

struct RgbPixel {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const RgbPixel&, const RgbPixel&) = default;
};

/// Row-major RGB raster. Always at least 1x1.
class PixelGrid {
 public:
  /// Throws std::invalid_argument if a dimension is zero or the pixel count
  /// does not match width * height.
  PixelGrid(std::size_t width, std::size_t height, std::vector<RgbPixel> pixels);

  /// Grid filled with a single color.
  static PixelGrid filled(std::size_t width, std::size_t height, RgbPixel color);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t size() const { return pixels_.size(); }

  const RgbPixel& at(std::size_t x, std::size_t y) const { return pixels_[y * width_ + x]; }
  RgbPixel& at(std::size_t x, std::size_t y) { return pixels_[y * width_ + x]; }

  std::span<const RgbPixel> pixels() const { return pixels_; }

  friend bool operator==(const PixelGrid&, const PixelGrid&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<RgbPixel> pixels_;
};

inline constexpr std::size_t kDefaultMaxDim = 256;
inline constexpr std::size_t kDefaultSegments = 8;

/// Decodes a PNG or JPEG stream. Alpha is composited over white.
/// Throws MalformedImage or UnsupportedFormat.
PixelGrid decode_image(std::span<const std::uint8_t> bytes);

/// Area-average resample so that the longest side is at most max_dim.
/// Grids already within bounds are returned unchanged.
PixelGrid downsize(const PixelGrid& grid, std::size_t max_dim);

/// Left-to-right vertical strips; the leftmost (width % n) strips are one
/// pixel wider. Throws TooManySegments when n_segments > width.
std::vector<PixelGrid> split_segments(const PixelGrid& grid, std::size_t n_segments);

}  // namespace chromanote
