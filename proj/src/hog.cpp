/*
 * HOG descriptor and left/right symmetry.
 *
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "beauty/hog.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace beauty {

namespace {

// Extracts columns [x0, x1) as a standalone image, optionally mirrored.
GrayImage take_columns(const GrayImage& img, int x0, int x1, bool mirror) {
  GrayImage out;
  out.width = x1 - x0;
  out.height = img.height;
  out.v.resize(out.pixel_count());
  for (int y = 0; y < out.height; ++y) {
    for (int x = 0; x < out.width; ++x) {
      const int src_x = mirror ? x1 - 1 - x : x0 + x;
      out.at(y, x) = img.at(y, src_x);
    }
  }
  return out;
}

double l2_norm(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

}  // namespace

HogDescriptor hog(const GrayImage& img) {
  if (img.width % kHogCellSize != 0 || img.height % kHogCellSize != 0) {
    throw std::invalid_argument("hog: dimensions must be divisible by " +
                                std::to_string(kHogCellSize));
  }
  const int cells_x = img.width / kHogCellSize;
  const int cells_y = img.height / kHogCellSize;
  HogDescriptor desc;
  desc.values.assign(static_cast<size_t>(cells_x) * cells_y * kHogBins, 0.0);

  const double bin_width = std::numbers::pi / kHogBins;
  for (int y = 0; y < img.height; ++y) {
    const int ym = y > 0 ? y - 1 : 0;
    const int yp = y < img.height - 1 ? y + 1 : img.height - 1;
    for (int x = 0; x < img.width; ++x) {
      const int xm = x > 0 ? x - 1 : 0;
      const int xp = x < img.width - 1 ? x + 1 : img.width - 1;
      const double gx = img.at(y, xp) - img.at(y, xm);
      const double gy = img.at(yp, x) - img.at(ym, x);
      const double mag = std::sqrt(gx * gx + gy * gy);
      if (mag == 0.0) continue;

      // Unsigned orientation in [0, pi).
      double theta = std::atan2(gy, gx);
      if (theta < 0.0) theta += std::numbers::pi;
      if (theta >= std::numbers::pi) theta = 0.0;

      // Linear split between the two bins whose centers straddle theta.
      const double pos = theta / bin_width - 0.5;
      const double lower = std::floor(pos);
      const double frac = pos - lower;
      int b0 = static_cast<int>(lower);
      if (b0 < 0) b0 += kHogBins;
      const int b1 = (b0 + 1) % kHogBins;

      const size_t cell = (static_cast<size_t>(y / kHogCellSize) * cells_x +
                           static_cast<size_t>(x / kHogCellSize)) *
                          kHogBins;
      desc.values[cell + b0] += (1.0 - frac) * mag;
      desc.values[cell + b1] += frac * mag;
    }
  }

  const double norm = l2_norm(desc.values);
  if (norm > 0.0) {
    for (double& v : desc.values) v /= norm;
  }
  return desc;
}

double symmetry(const GrayImage& img) {
  const GrayImage square = resize_square(img, kSymmetryWorkingSide);
  const int half = kSymmetryWorkingSide / 2;
  const GrayImage left = take_columns(square, 0, half, false);
  const GrayImage right_flipped =
      take_columns(square, half, kSymmetryWorkingSide, true);
  const HogDescriptor a = hog(left);
  const HogDescriptor b = hog(right_flipped);
  double acc = 0.0;
  for (size_t i = 0; i < a.values.size(); ++i) {
    const double d = a.values[i] - b.values[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

}  // namespace beauty
