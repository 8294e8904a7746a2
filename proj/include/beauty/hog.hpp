/*
 * Histogram of oriented gradients over non-overlapping cells.
 *
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef BEAUTY_HOG_HPP
#define BEAUTY_HOG_HPP

#include <vector>

#include "beauty/image.hpp"

namespace beauty {

constexpr int kHogCellSize = 16;
constexpr int kHogBins = 9;

// Per-cell orientation histogram block, cells in row-major order with the
// kHogBins bins of each cell contiguous. The whole descriptor is
// L2-normalized; a zero-gradient input keeps the zero vector.
struct HogDescriptor {
  std::vector<double> values;
  int cell_size = kHogCellSize;
  int bins = kHogBins;
};

// Gradients are centered differences with index clamping at the borders.
// Orientations are unsigned over [0, 180) degrees; each magnitude vote is
// split linearly between the two bins whose centers straddle the angle,
// wrapping circularly.
//
// Both dimensions must be divisible by kHogCellSize.
HogDescriptor hog(const GrayImage& img);

// Left/right symmetry distance: the image is resampled to 256x256, split
// into vertical halves, the right half mirrored, and the L2 distance of
// the two halves' HOG descriptors returned. 0 for mirror-symmetric input.
double symmetry(const GrayImage& img);

constexpr int kSymmetryWorkingSide = 256;

}  // namespace beauty

#endif  // BEAUTY_HOG_HPP
