/*
 * Gray-level co-occurrence matrix and its texture statistics.
 *
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef BEAUTY_GLCM_HPP
#define BEAUTY_GLCM_HPP

#include <array>
#include <span>
#include <vector>

#include "beauty/image.hpp"

namespace beauty {

constexpr int kGlcmLevels = 16;

// Symmetric transition-probability matrix over kGlcmLevels quantized gray
// levels; entries sum to 1.
struct Glcm {
  std::array<double, kGlcmLevels * kGlcmLevels> p{};

  double at(int i, int j) const { return p[static_cast<size_t>(i) * kGlcmLevels + j]; }
  double& at(int i, int j) { return p[static_cast<size_t>(i) * kGlcmLevels + j]; }
};

// (row, col) displacement between co-occurring pixels.
struct GlcmOffset {
  int dr;
  int dc;
};

// Right, down, down-right, down-left.
inline constexpr std::array<GlcmOffset, 4> kGlcmDefaultOffsets = {
    GlcmOffset{0, 1}, GlcmOffset{1, 0}, GlcmOffset{1, 1}, GlcmOffset{1, -1}};

// Luminance quantized as floor(y * 16) clamped to [0, 15]. Each offset
// matrix counts ordered pairs in both directions and is normalized on its
// own, then the offset matrices are averaged so every direction carries
// equal weight.
Glcm glcm(const GrayImage& img,
          std::span<const GlcmOffset> offsets = kGlcmDefaultOffsets);

struct HaralickStats {
  double entropy;      // -sum p log2 p, in bits
  double energy;       // sum p^2
  double homogeneity;  // sum p / (1 + |i - j|)
  double contrast;     // sum (i - j)^2 p
};

HaralickStats haralick(const Glcm& g);

}  // namespace beauty

#endif  // BEAUTY_GLCM_HPP
