/*
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "support/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <stdexcept>

#include <unistd.h>

#include <jpeglib.h>
#include <png.h>

#include "beauty/errors.hpp"

namespace beauty::testing {

namespace {

uint8_t to_byte(double v) {
  const double scaled = std::clamp(v, 0.0, 1.0) * 255.0;
  return static_cast<uint8_t>(std::lround(scaled));
}

std::vector<uint8_t> interleave(const RgbImage& img) {
  std::vector<uint8_t> pixels(static_cast<size_t>(img.width) * img.height * 3);
  for (size_t i = 0; i < img.pixel_count(); ++i) {
    pixels[3 * i] = to_byte(img.r[i]);
    pixels[3 * i + 1] = to_byte(img.g[i]);
    pixels[3 * i + 2] = to_byte(img.b[i]);
  }
  return pixels;
}

double unit(std::mt19937& rng) {
  return static_cast<double>(rng()) / 4294967296.0;
}

}  // namespace

std::vector<uint8_t> encode_png(const RgbImage& img) {
  const std::vector<uint8_t> pixels = interleave(img);
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.width);
  image.height = static_cast<png_uint_32>(img.height);
  image.format = PNG_FORMAT_RGB;

  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&image, nullptr, &size, 0, pixels.data(), 0,
                                 nullptr)) {
    throw std::runtime_error(std::string("png size probe failed: ") +
                             image.message);
  }
  std::vector<uint8_t> out(size);
  if (!png_image_write_to_memory(&image, out.data(), &size, 0, pixels.data(),
                                 0, nullptr)) {
    throw std::runtime_error(std::string("png encode failed: ") +
                             image.message);
  }
  out.resize(size);
  return out;
}

void write_png(const std::string& path, const RgbImage& img) {
  const std::vector<uint8_t> bytes = encode_png(img);
  write_file(path, std::string(bytes.begin(), bytes.end()));
}

std::vector<uint8_t> encode_jpeg(const RgbImage& img, int quality) {
  const std::vector<uint8_t> pixels = interleave(img);
  jpeg_compress_struct cinfo;
  jpeg_error_mgr jerr;
  cinfo.err = jpeg_std_error(&jerr);
  jpeg_create_compress(&cinfo);

  unsigned char* buffer = nullptr;
  unsigned long buffer_size = 0;
  jpeg_mem_dest(&cinfo, &buffer, &buffer_size);

  cinfo.image_width = static_cast<JDIMENSION>(img.width);
  cinfo.image_height = static_cast<JDIMENSION>(img.height);
  cinfo.input_components = 3;
  cinfo.in_color_space = JCS_RGB;
  jpeg_set_defaults(&cinfo);
  jpeg_set_quality(&cinfo, quality, TRUE);
  jpeg_start_compress(&cinfo, TRUE);
  const size_t stride = static_cast<size_t>(img.width) * 3;
  while (cinfo.next_scanline < cinfo.image_height) {
    const JSAMPLE* row = pixels.data() + cinfo.next_scanline * stride;
    JSAMPROW rows[1] = {const_cast<JSAMPROW>(row)};
    jpeg_write_scanlines(&cinfo, rows, 1);
  }
  jpeg_finish_compress(&cinfo);
  jpeg_destroy_compress(&cinfo);

  std::vector<uint8_t> out(buffer, buffer + buffer_size);
  std::free(buffer);
  return out;
}

void write_jpeg(const std::string& path, const RgbImage& img, int quality) {
  const std::vector<uint8_t> bytes = encode_jpeg(img, quality);
  write_file(path, std::string(bytes.begin(), bytes.end()));
}

RgbImage constant_image(int width, int height, double r, double g, double b) {
  RgbImage img;
  img.width = width;
  img.height = height;
  img.r.assign(static_cast<size_t>(width) * height, r);
  img.g.assign(static_cast<size_t>(width) * height, g);
  img.b.assign(static_cast<size_t>(width) * height, b);
  return img;
}

RgbImage random_image(uint64_t seed, int width, int height) {
  std::mt19937 rng(static_cast<uint32_t>(seed ^ (seed >> 32)));
  const double base_r0 = unit(rng), base_g0 = unit(rng), base_b0 = unit(rng);
  const double base_r1 = unit(rng), base_g1 = unit(rng), base_b1 = unit(rng);
  const bool horizontal = rng() % 2 == 0;

  RgbImage img = constant_image(width, height, 0.0, 0.0, 0.0);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double t = horizontal
                           ? static_cast<double>(x) / std::max(1, width - 1)
                           : static_cast<double>(y) / std::max(1, height - 1);
      const size_t i = static_cast<size_t>(y) * width + x;
      img.r[i] = base_r0 + (base_r1 - base_r0) * t;
      img.g[i] = base_g0 + (base_g1 - base_g0) * t;
      img.b[i] = base_b0 + (base_b1 - base_b0) * t;
    }
  }

  const int rectangles = 2 + static_cast<int>(rng() % 5);
  for (int k = 0; k < rectangles; ++k) {
    const int x0 = static_cast<int>(rng() % static_cast<uint32_t>(width));
    const int y0 = static_cast<int>(rng() % static_cast<uint32_t>(height));
    const int rw = 1 + static_cast<int>(rng() % static_cast<uint32_t>(width / 2 + 1));
    const int rh = 1 + static_cast<int>(rng() % static_cast<uint32_t>(height / 2 + 1));
    const double cr = unit(rng), cg = unit(rng), cb = unit(rng);
    for (int y = y0; y < std::min(height, y0 + rh); ++y) {
      for (int x = x0; x < std::min(width, x0 + rw); ++x) {
        const size_t i = static_cast<size_t>(y) * width + x;
        img.r[i] = cr;
        img.g[i] = cg;
        img.b[i] = cb;
      }
    }
  }

  if (rng() % 2 == 0) {
    // A bright disk shifts saliency mass and the thirds profile.
    const double cx = unit(rng) * width;
    const double cy = unit(rng) * height;
    const double radius = (0.05 + 0.15 * unit(rng)) * std::min(width, height);
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        const double dx = x - cx, dy = y - cy;
        if (dx * dx + dy * dy <= radius * radius) {
          const size_t i = static_cast<size_t>(y) * width + x;
          img.r[i] = 0.95;
          img.g[i] = 0.95;
          img.b[i] = 0.9;
        }
      }
    }
  }

  const double noise = 0.02 + 0.06 * unit(rng);
  for (size_t i = 0; i < img.pixel_count(); ++i) {
    img.r[i] = std::clamp(img.r[i] + noise * (unit(rng) - 0.5), 0.0, 1.0);
    img.g[i] = std::clamp(img.g[i] + noise * (unit(rng) - 0.5), 0.0, 1.0);
    img.b[i] = std::clamp(img.b[i] + noise * (unit(rng) - 0.5), 0.0, 1.0);
  }
  return img;
}

RgbImage mirror_symmetric(const RgbImage& img) {
  if (img.width % 2 != 0) {
    throw std::invalid_argument("mirror_symmetric: width must be even");
  }
  RgbImage out = img;
  for (int y = 0; y < img.height; ++y) {
    for (int x = img.width / 2; x < img.width; ++x) {
      const size_t dst = static_cast<size_t>(y) * img.width + x;
      const size_t src = static_cast<size_t>(y) * img.width + (img.width - 1 - x);
      out.r[dst] = img.r[src];
      out.g[dst] = img.g[src];
      out.b[dst] = img.b[src];
    }
  }
  return out;
}

std::string scratch_dir(const std::string& name) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() /
                       ("beautyrank-" + std::to_string(::getpid()) + "-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  return content;
}

void write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream out(path, std::ios::binary);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace beauty::testing
