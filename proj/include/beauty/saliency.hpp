/*
 * Spectral-residual saliency and rule-of-thirds pooling.
 *
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef BEAUTY_SALIENCY_HPP
#define BEAUTY_SALIENCY_HPP

#include <array>
#include <vector>

#include "beauty/image.hpp"

namespace beauty {

// 96 divides evenly into the 3x3 thirds grid.
constexpr int kSaliencySide = 96;

// Fixed 96x96 attention map, min-max normalized to [0,1]; an input with no
// structure yields the all-zero map.
struct SaliencyMap {
  std::vector<double> v;  // kSaliencySide * kSaliencySide, row-major

  double at(int y, int x) const { return v[static_cast<size_t>(y) * kSaliencySide + x]; }
};

// Frequency-domain saliency: the image is resampled to 96x96, the
// log-amplitude spectrum is compared against its 3x3 local mean, and the
// residual is transported back with the original phase. The squared
// magnitude of the reconstruction is blurred (Gaussian, sigma 2.5,
// radius-8 kernel) and min-max normalized.
SaliencyMap spectral_saliency(const GrayImage& img);

// Mean saliency over each cell of the 3x3 partition, row-major.
std::array<double, 9> thirds_saliency(const SaliencyMap& map);

}  // namespace beauty

#endif  // BEAUTY_SALIENCY_HPP
