/*
 * Co-occurrence matrix construction and texture statistics.
 *
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "beauty/glcm.hpp"

#include <algorithm>
#include <cmath>

namespace beauty {

namespace {

int quantize(double y) {
  const int level = static_cast<int>(std::floor(y * kGlcmLevels));
  return std::clamp(level, 0, kGlcmLevels - 1);
}

}  // namespace

Glcm glcm(const GrayImage& img, std::span<const GlcmOffset> offsets) {
  std::vector<int> levels(img.pixel_count());
  for (size_t i = 0; i < levels.size(); ++i) levels[i] = quantize(img.v[i]);
  auto level_at = [&levels, &img](int y, int x) {
    return levels[static_cast<size_t>(y) * img.width + x];
  };

  Glcm result;
  size_t used_offsets = 0;
  std::array<double, kGlcmLevels * kGlcmLevels> counts{};
  for (const GlcmOffset& off : offsets) {
    counts.fill(0.0);
    double total = 0.0;
    for (int y = 0; y < img.height; ++y) {
      const int y2 = y + off.dr;
      if (y2 < 0 || y2 >= img.height) continue;
      for (int x = 0; x < img.width; ++x) {
        const int x2 = x + off.dc;
        if (x2 < 0 || x2 >= img.width) continue;
        const int a = level_at(y, x);
        const int b = level_at(y2, x2);
        counts[static_cast<size_t>(a) * kGlcmLevels + b] += 1.0;
        counts[static_cast<size_t>(b) * kGlcmLevels + a] += 1.0;
        total += 2.0;
      }
    }
    if (total == 0.0) continue;  // offset has no valid pairs at this size
    for (size_t i = 0; i < counts.size(); ++i) result.p[i] += counts[i] / total;
    ++used_offsets;
  }
  if (used_offsets > 0) {
    for (double& p : result.p) p /= static_cast<double>(used_offsets);
  }
  return result;
}

HaralickStats haralick(const Glcm& g) {
  HaralickStats stats{0.0, 0.0, 0.0, 0.0};
  for (int i = 0; i < kGlcmLevels; ++i) {
    for (int j = 0; j < kGlcmLevels; ++j) {
      const double p = g.at(i, j);
      if (p > 0.0) stats.entropy -= p * std::log2(p);
      stats.energy += p * p;
      stats.homogeneity += p / (1.0 + std::abs(i - j));
      stats.contrast += static_cast<double>(i - j) * (i - j) * p;
    }
  }
  return stats;
}

}  // namespace beauty
