/*
 * Image decoding and pixel-level primitives.
 *
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "beauty/image.hpp"

#include <algorithm>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>

#include <jpeglib.h>
#include <png.h>

#include "beauty/errors.hpp"

namespace beauty {

namespace {

constexpr int kMinSide = 3;

bool looks_like_png(std::span<const uint8_t> bytes) {
  static const uint8_t sig[8] = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
  return bytes.size() >= 8 && std::equal(sig, sig + 8, bytes.data());
}

bool looks_like_jpeg(std::span<const uint8_t> bytes) {
  return bytes.size() >= 2 && bytes[0] == 0xff && bytes[1] == 0xd8;
}

RgbImage from_rgb8(const std::vector<uint8_t>& rgb, int width, int height) {
  RgbImage img;
  img.width = width;
  img.height = height;
  const size_t n = static_cast<size_t>(width) * height;
  img.r.resize(n);
  img.g.resize(n);
  img.b.resize(n);
  for (size_t i = 0; i < n; ++i) {
    img.r[i] = rgb[3 * i + 0] / 255.0;
    img.g[i] = rgb[3 * i + 1] / 255.0;
    img.b[i] = rgb[3 * i + 2] / 255.0;
  }
  return img;
}

RgbImage decode_png(std::span<const uint8_t> bytes) {
  png_image png;
  std::memset(&png, 0, sizeof(png));
  png.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&png, bytes.data(), bytes.size())) {
    throw decode_error(std::string("png: ") + png.message);
  }
  png.format = PNG_FORMAT_RGB;
  const int width = static_cast<int>(png.width);
  const int height = static_cast<int>(png.height);
  if (width < kMinSide || height < kMinSide) {
    png_image_free(&png);
    throw too_small_error("image must be at least 3x3, got " +
                          std::to_string(width) + "x" + std::to_string(height));
  }
  std::vector<uint8_t> rgb(PNG_IMAGE_SIZE(png));
  if (!png_image_finish_read(&png, nullptr, rgb.data(), 0, nullptr)) {
    std::string msg = png.message;
    png_image_free(&png);
    throw decode_error("png: " + msg);
  }
  return from_rgb8(rgb, width, height);
}

struct JpegErrorTrap {
  jpeg_error_mgr mgr;
  std::jmp_buf env;
  char message[JMSG_LENGTH_MAX] = {0};
};

void jpeg_error_exit(j_common_ptr cinfo) {
  auto* trap = reinterpret_cast<JpegErrorTrap*>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, trap->message);
  std::longjmp(trap->env, 1);
}

RgbImage decode_jpeg(std::span<const uint8_t> bytes) {
  jpeg_decompress_struct cinfo;
  JpegErrorTrap trap;
  cinfo.err = jpeg_std_error(&trap.mgr);
  trap.mgr.error_exit = jpeg_error_exit;

  std::vector<uint8_t> rgb;
  int width = 0, height = 0;
  if (setjmp(trap.env)) {
    jpeg_destroy_decompress(&cinfo);
    throw decode_error(std::string("jpeg: ") + trap.message);
  }
  jpeg_create_decompress(&cinfo);
  jpeg_mem_src(&cinfo, bytes.data(), bytes.size());
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space = JCS_RGB;
  jpeg_start_decompress(&cinfo);
  width = static_cast<int>(cinfo.output_width);
  height = static_cast<int>(cinfo.output_height);
  if (width < kMinSide || height < kMinSide) {
    jpeg_destroy_decompress(&cinfo);
    throw too_small_error("image must be at least 3x3, got " +
                          std::to_string(width) + "x" + std::to_string(height));
  }
  rgb.resize(static_cast<size_t>(width) * height * 3);
  const size_t stride = static_cast<size_t>(width) * 3;
  while (cinfo.output_scanline < cinfo.output_height) {
    uint8_t* row = rgb.data() + cinfo.output_scanline * stride;
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  return from_rgb8(rgb, width, height);
}

}  // namespace

RgbImage decode(std::span<const uint8_t> bytes) {
  if (looks_like_png(bytes)) return decode_png(bytes);
  if (looks_like_jpeg(bytes)) return decode_jpeg(bytes);
  throw decode_error("unsupported image format (expected JPEG or PNG)");
}

RgbImage decode_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (in.bad()) throw io_error("cannot read " + path);
  return decode(bytes);
}

GrayImage to_luminance(const RgbImage& img) {
  GrayImage gray;
  gray.width = img.width;
  gray.height = img.height;
  gray.v.resize(img.pixel_count());
  for (size_t i = 0; i < gray.v.size(); ++i) {
    double y = 0.299 * img.r[i] + 0.587 * img.g[i] + 0.114 * img.b[i];
    gray.v[i] = std::clamp(y, 0.0, 1.0);
  }
  return gray;
}

HsvImage to_hsv(const RgbImage& img) {
  HsvImage hsv;
  hsv.width = img.width;
  hsv.height = img.height;
  const size_t n = img.pixel_count();
  hsv.h.resize(n);
  hsv.s.resize(n);
  hsv.v.resize(n);
  for (size_t i = 0; i < n; ++i) {
    const double r = img.r[i], g = img.g[i], b = img.b[i];
    const double maxc = std::max({r, g, b});
    const double minc = std::min({r, g, b});
    const double delta = maxc - minc;
    hsv.v[i] = maxc;
    hsv.s[i] = maxc > 0.0 ? delta / maxc : 0.0;
    double h = 0.0;
    if (delta > 0.0) {
      if (maxc == r) {
        h = (g - b) / delta;
      } else if (maxc == g) {
        h = (b - r) / delta + 2.0;
      } else {
        h = (r - g) / delta + 4.0;
      }
      h /= 6.0;
      if (h < 0.0) h += 1.0;
      if (h >= 1.0) h = 0.0;
    }
    hsv.h[i] = h;
  }
  return hsv;
}

GrayImage resize_square(const GrayImage& img, int side) {
  GrayImage out;
  out.width = side;
  out.height = side;
  out.v.resize(static_cast<size_t>(side) * side);
  const double sx_scale = static_cast<double>(img.width) / side;
  const double sy_scale = static_cast<double>(img.height) / side;
  for (int y = 0; y < side; ++y) {
    double sy = (y + 0.5) * sy_scale - 0.5;
    sy = std::clamp(sy, 0.0, static_cast<double>(img.height - 1));
    const int y0 = static_cast<int>(std::floor(sy));
    const int y1 = std::min(y0 + 1, img.height - 1);
    const double fy = sy - y0;
    for (int x = 0; x < side; ++x) {
      double sx = (x + 0.5) * sx_scale - 0.5;
      sx = std::clamp(sx, 0.0, static_cast<double>(img.width - 1));
      const int x0 = static_cast<int>(std::floor(sx));
      const int x1 = std::min(x0 + 1, img.width - 1);
      const double fx = sx - x0;
      // Difference-form lerp: exact when both endpoints are equal, so a
      // constant raster resamples to the identical constant.
      const double top =
          img.at(y0, x0) + fx * (img.at(y0, x1) - img.at(y0, x0));
      const double bot =
          img.at(y1, x0) + fx * (img.at(y1, x1) - img.at(y1, x0));
      out.at(y, x) = top + fy * (bot - top);
    }
  }
  return out;
}

}  // namespace beauty
