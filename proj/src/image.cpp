// Raster decoding (libpng / libjpeg), area-average downsizing, segmentation.

#include "chromanote/image.h"

#include <cstdio>
// jpeglib.h needs FILE declared first.
#include <jpeglib.h>
#include <png.h>

#include <algorithm>
#include <array>
#include <csetjmp>
#include <cstring>
#include <stdexcept>
#include <string>

#include "chromanote/errors.h"

namespace chromanote {

PixelGrid::PixelGrid(std::size_t width, std::size_t height, std::vector<RgbPixel> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width_ == 0 || height_ == 0) {
    throw std::invalid_argument("PixelGrid: dimensions must be at least 1x1");
  }
  if (pixels_.size() != width_ * height_) {
    throw std::invalid_argument("PixelGrid: pixel count does not match width * height");
  }
}

PixelGrid PixelGrid::filled(std::size_t width, std::size_t height, RgbPixel color) {
  return PixelGrid(width, height, std::vector<RgbPixel>(width * height, color));
}

namespace {

constexpr std::array<std::uint8_t, 8> kPngSignature = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};

bool starts_with(std::span<const std::uint8_t> bytes, std::string_view magic, std::size_t offset = 0) {
  if (bytes.size() < offset + magic.size()) return false;
  return std::equal(magic.begin(), magic.end(), bytes.begin() + static_cast<std::ptrdiff_t>(offset),
                    [](char m, std::uint8_t b) { return static_cast<std::uint8_t>(m) == b; });
}

bool is_png(std::span<const std::uint8_t> bytes) {
  return bytes.size() >= kPngSignature.size() &&
         std::equal(kPngSignature.begin(), kPngSignature.end(), bytes.begin());
}

bool is_jpeg(std::span<const std::uint8_t> bytes) {
  return bytes.size() >= 3 && bytes[0] == 0xFF && bytes[1] == 0xD8 && bytes[2] == 0xFF;
}

const char* other_container_name(std::span<const std::uint8_t> bytes) {
  if (starts_with(bytes, "GIF87a") || starts_with(bytes, "GIF89a")) return "GIF";
  if (starts_with(bytes, std::string_view("II*\0", 4)) || starts_with(bytes, std::string_view("MM\0*", 4))) {
    return "TIFF";
  }
  if (starts_with(bytes, "BM")) return "BMP";
  if (starts_with(bytes, "RIFF") && starts_with(bytes, "WEBP", 8)) return "WebP";
  if (starts_with(bytes, "qoif")) return "QOI";
  return nullptr;
}

// Composite one straight-alpha channel over white, rounding half up.
std::uint8_t over_white(unsigned c, unsigned a) {
  return static_cast<std::uint8_t>((c * a + 255u * (255u - a) + 127u) / 255u);
}

// ---------------------------------------------------------------------------
// PNG

struct PngSource {
  std::span<const std::uint8_t> bytes;
  std::size_t offset = 0;
};

void png_read_from_span(png_structp png, png_bytep out, png_size_t count) {
  auto* src = static_cast<PngSource*>(png_get_io_ptr(png));
  if (src->bytes.size() - src->offset < count) {
    png_error(png, "unexpected end of data");
  }
  std::memcpy(out, src->bytes.data() + src->offset, count);
  src->offset += count;
}

void png_on_error(png_structp png, png_const_charp message) {
  auto* buffer = static_cast<std::string*>(png_get_error_ptr(png));
  if (buffer != nullptr) *buffer = message;
  png_longjmp(png, 1);
}

void png_on_warning(png_structp, png_const_charp) {}

PixelGrid decode_png(std::span<const std::uint8_t> bytes) {
  // Every C++ object that must survive a longjmp lives above setjmp.
  std::string error;
  PngSource source{bytes, 0};
  std::vector<std::uint8_t> rgba;
  std::vector<png_bytep> rows;
  png_uint_32 width = 0;
  png_uint_32 height = 0;

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &error, png_on_error, png_on_warning);
  if (png == nullptr) throw MalformedImage("PNG: cannot allocate decoder");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw MalformedImage("PNG: cannot allocate decoder");
  }

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw MalformedImage("PNG: " + error);
  }

  png_set_read_fn(png, &source, png_read_from_span);
  png_read_info(png, info);

  width = png_get_image_width(png, info);
  height = png_get_image_height(png, info);
  const int color_type = png_get_color_type(png, info);
  const int bit_depth = png_get_bit_depth(png, info);

  if (bit_depth == 16) png_set_strip_16(png);
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
    png_set_gray_to_rgb(png);
  }
  png_set_filler(png, 0xFF, PNG_FILLER_AFTER);
  png_set_interlace_handling(png);
  png_read_update_info(png, info);

  if (png_get_rowbytes(png, info) != static_cast<png_size_t>(width) * 4) {
    png_error(png, "unexpected row layout after transforms");
  }
  rgba.resize(static_cast<std::size_t>(width) * height * 4);
  rows.resize(height);
  for (png_uint_32 y = 0; y < height; ++y) {
    rows[y] = rgba.data() + static_cast<std::size_t>(y) * width * 4;
  }
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  std::vector<RgbPixel> pixels(static_cast<std::size_t>(width) * height);
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    const std::uint8_t* p = &rgba[i * 4];
    pixels[i] = {over_white(p[0], p[3]), over_white(p[1], p[3]), over_white(p[2], p[3])};
  }
  return PixelGrid(width, height, std::move(pixels));
}

// ---------------------------------------------------------------------------
// JPEG

struct JpegErrorManager {
  jpeg_error_mgr base;
  std::jmp_buf jump;
  char message[JMSG_LENGTH_MAX];
};

void jpeg_on_error(j_common_ptr cinfo) {
  auto* err = reinterpret_cast<JpegErrorManager*>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, err->message);
  std::longjmp(err->jump, 1);
}

void jpeg_silent(j_common_ptr, int) {}

PixelGrid decode_jpeg(std::span<const std::uint8_t> bytes) {
  std::vector<std::uint8_t> rgb;
  jpeg_decompress_struct cinfo{};
  JpegErrorManager err{};

  cinfo.err = jpeg_std_error(&err.base);
  err.base.error_exit = jpeg_on_error;
  err.base.emit_message = jpeg_silent;

  if (setjmp(err.jump)) {
    jpeg_destroy_decompress(&cinfo);
    throw MalformedImage(std::string("JPEG: ") + err.message);
  }

  jpeg_create_decompress(&cinfo);
  jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
  jpeg_read_header(&cinfo, TRUE);
  if (cinfo.jpeg_color_space == JCS_CMYK || cinfo.jpeg_color_space == JCS_YCCK) {
    jpeg_destroy_decompress(&cinfo);
    throw UnsupportedFormat("JPEG: CMYK/YCCK color space is not supported");
  }
  cinfo.out_color_space = JCS_RGB;
  jpeg_start_decompress(&cinfo);

  const std::size_t width = cinfo.output_width;
  const std::size_t height = cinfo.output_height;
  rgb.resize(width * height * 3);
  while (cinfo.output_scanline < cinfo.output_height) {
    JSAMPROW row = rgb.data() + static_cast<std::size_t>(cinfo.output_scanline) * width * 3;
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);

  std::vector<RgbPixel> pixels(width * height);
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    pixels[i] = {rgb[i * 3], rgb[i * 3 + 1], rgb[i * 3 + 2]};
  }
  return PixelGrid(width, height, std::move(pixels));
}

// Integer area weights for resampling `src_len` samples onto `dst_len`.
// Source sample i covers [i*dst_len, (i+1)*dst_len) and destination sample j
// covers [j*src_len, (j+1)*src_len); each destination's weights sum to src_len.
struct Tap {
  std::size_t src;
  std::uint64_t weight;
};

std::vector<std::vector<Tap>> area_taps(std::size_t src_len, std::size_t dst_len) {
  std::vector<std::vector<Tap>> taps(dst_len);
  for (std::size_t j = 0; j < dst_len; ++j) {
    const std::uint64_t lo = static_cast<std::uint64_t>(j) * src_len;
    const std::uint64_t hi = lo + src_len;
    for (std::size_t i = lo / dst_len; i < src_len && static_cast<std::uint64_t>(i) * dst_len < hi; ++i) {
      const std::uint64_t s_lo = static_cast<std::uint64_t>(i) * dst_len;
      const std::uint64_t s_hi = s_lo + dst_len;
      const std::uint64_t overlap = std::min(hi, s_hi) - std::max(lo, s_lo);
      if (overlap > 0) taps[j].push_back({i, overlap});
    }
  }
  return taps;
}

}  // namespace

PixelGrid decode_image(std::span<const std::uint8_t> bytes) {
  if (is_png(bytes)) return decode_png(bytes);
  if (is_jpeg(bytes)) return decode_jpeg(bytes);
  if (const char* name = other_container_name(bytes)) {
    throw UnsupportedFormat(std::string(name) + " images are not supported (PNG or JPEG only)");
  }
  throw MalformedImage("not a PNG or JPEG stream");
}

PixelGrid downsize(const PixelGrid& grid, std::size_t max_dim) {
  if (max_dim == 0) throw std::invalid_argument("downsize: max_dim must be at least 1");
  const std::size_t w = grid.width();
  const std::size_t h = grid.height();
  const std::size_t longest = std::max(w, h);
  if (longest <= max_dim) return grid;

  const std::size_t new_w = std::max<std::size_t>(1, (w * max_dim + longest / 2) / longest);
  const std::size_t new_h = std::max<std::size_t>(1, (h * max_dim + longest / 2) / longest);

  const auto x_taps = area_taps(w, new_w);
  const auto y_taps = area_taps(h, new_h);

  // Horizontal pass keeps exact integer sums; the single rounding happens at
  // the end so the result is the exact area average rounded half up.
  std::vector<std::array<std::uint64_t, 3>> rows(new_w * h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t j = 0; j < new_w; ++j) {
      std::array<std::uint64_t, 3> acc{};
      for (const Tap& t : x_taps[j]) {
        const RgbPixel& p = grid.at(t.src, y);
        acc[0] += p.r * t.weight;
        acc[1] += p.g * t.weight;
        acc[2] += p.b * t.weight;
      }
      rows[y * new_w + j] = acc;
    }
  }

  const std::uint64_t total = static_cast<std::uint64_t>(w) * h;
  auto finish = [total](std::uint64_t sum) {
    return static_cast<std::uint8_t>((2 * sum + total) / (2 * total));
  };

  std::vector<RgbPixel> out(new_w * new_h);
  for (std::size_t i = 0; i < new_h; ++i) {
    for (std::size_t j = 0; j < new_w; ++j) {
      std::array<std::uint64_t, 3> acc{};
      for (const Tap& t : y_taps[i]) {
        const auto& row = rows[t.src * new_w + j];
        for (int c = 0; c < 3; ++c) acc[c] += row[c] * t.weight;
      }
      out[i * new_w + j] = {finish(acc[0]), finish(acc[1]), finish(acc[2])};
    }
  }
  return PixelGrid(new_w, new_h, std::move(out));
}

std::vector<PixelGrid> split_segments(const PixelGrid& grid, std::size_t n_segments) {
  if (n_segments == 0) throw std::invalid_argument("split_segments: n_segments must be at least 1");
  if (n_segments > grid.width()) {
    throw TooManySegments("cannot split width " + std::to_string(grid.width()) + " into " +
                          std::to_string(n_segments) + " segments");
  }
  const std::size_t base = grid.width() / n_segments;
  const std::size_t extra = grid.width() % n_segments;

  std::vector<PixelGrid> strips;
  strips.reserve(n_segments);
  std::size_t x0 = 0;
  for (std::size_t s = 0; s < n_segments; ++s) {
    const std::size_t strip_w = base + (s < extra ? 1 : 0);
    std::vector<RgbPixel> pixels;
    pixels.reserve(strip_w * grid.height());
    for (std::size_t y = 0; y < grid.height(); ++y) {
      for (std::size_t x = x0; x < x0 + strip_w; ++x) pixels.push_back(grid.at(x, y));
    }
    strips.emplace_back(strip_w, grid.height(), std::move(pixels));
    x0 += strip_w;
  }
  return strips;
}

}  // namespace chromanote
