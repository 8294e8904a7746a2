/*
 * Image planes and deterministic pixel-level primitives.
 *
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef BEAUTY_IMAGE_HPP
#define BEAUTY_IMAGE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace beauty {

// Decoded raster, one double per channel per pixel, values in [0,1].
// Minimum size 3x3; smaller inputs are rejected at decode time.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<double> r, g, b;  // row-major, width*height each

  double red(int y, int x) const { return r[static_cast<size_t>(y) * width + x]; }
  double green(int y, int x) const { return g[static_cast<size_t>(y) * width + x]; }
  double blue(int y, int x) const { return b[static_cast<size_t>(y) * width + x]; }
  size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

// Single luminance channel in [0,1].
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<double> v;  // row-major

  double at(int y, int x) const { return v[static_cast<size_t>(y) * width + x]; }
  double& at(int y, int x) { return v[static_cast<size_t>(y) * width + x]; }
  size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

// Hue as a fraction of the full circle in [0,1); saturation and value in
// [0,1]. Achromatic pixels (s == 0) carry hue 0.
struct HsvImage {
  int width = 0;
  int height = 0;
  std::vector<double> h, s, v;  // row-major

  size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

// Decodes a JPEG or PNG stream into normalized RGB.
// Throws decode_error on corrupt/unsupported data, too_small_error when
// either dimension is below 3.
RgbImage decode(std::span<const uint8_t> bytes);

// Reads the whole file and decodes it. Throws io_error when unreadable.
RgbImage decode_file(const std::string& path);

// BT.601 luma: Y = 0.299 R + 0.587 G + 0.114 B.
GrayImage to_luminance(const RgbImage& img);

// Standard RGB -> HSV; hue rescaled from degrees to [0,1).
HsvImage to_hsv(const RgbImage& img);

// Bilinear resampling onto a side x side grid, half-pixel centers, sample
// coordinates clamped to the source rectangle. side == source size is the
// identity.
GrayImage resize_square(const GrayImage& img, int side);

}  // namespace beauty

#endif  // BEAUTY_IMAGE_HPP
