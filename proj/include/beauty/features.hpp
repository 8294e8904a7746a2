/*
 * The 47-dimensional compositional feature vector: color, spatial
 * arrangement, and texture descriptors of one photograph.
 *
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 *
 * Fixed layout:
 *   [0]      luminance contrast
 *   [1..3]   mean hue, saturation, value over the whole image
 *   [4..6]   mean hue, saturation, value over the central 3x3 cell
 *   [7..9]   pleasure, arousal, dominance
 *   [10..21] 12-bin hue histogram
 *   [22..26] 5-bin saturation histogram
 *   [27..29] 3-bin brightness histogram
 *   [30..32] histogram contrasts (std of the three histograms above)
 *   [33]     left/right symmetry
 *   [34..42] rule-of-thirds mean saliency, row-major
 *   [43..46] texture entropy, energy, homogeneity, contrast
 */

#ifndef BEAUTY_FEATURES_HPP
#define BEAUTY_FEATURES_HPP

#include <array>

#include "beauty/glcm.hpp"
#include "beauty/hog.hpp"
#include "beauty/image.hpp"
#include "beauty/saliency.hpp"

namespace beauty {

constexpr int kFeatureDim = 47;

// Identifies the layout above plus the descriptor conventions baked into
// it (L2-normalized HOG halves in the symmetry term). Models remember the
// version they were trained against and refuse to score anything else.
inline constexpr char kFeatureLayoutVersion[] = "fv47-hognorm-v1";

// Positions of the blocks inside the vector.
enum FeatureIndex : int {
  kFContrast = 0,
  kFMeanHue = 1,
  kFMeanSat = 2,
  kFMeanVal = 3,
  kFInnerHue = 4,
  kFInnerSat = 5,
  kFInnerVal = 6,
  kFPleasure = 7,
  kFArousal = 8,
  kFDominance = 9,
  kFHueHist = 10,       // 12 bins
  kFSatHist = 22,       // 5 bins
  kFValHist = 27,       // 3 bins
  kFHistContrast = 30,  // 3 values: hue, saturation, brightness
  kFSymmetry = 33,
  kFThirds = 34,    // 9 values
  kFTexture = 43,   // entropy, energy, homogeneity, contrast
};

using FeatureVector = std::array<double, kFeatureDim>;

// (Y_max - Y_min) / mean(Y); 0 when the mean is below 1e-8.
double contrast_metric(const GrayImage& gray);

struct HsvMeans {
  double hue, sat, val;                    // whole image
  double inner_hue, inner_sat, inner_val;  // central cell of the 3x3 grid
};

// Hue is averaged circularly: atan2 of the summed unit vectors, remapped
// to [0,1), and 0 when the mean resultant length is below 1e-9. The inner
// region spans rows [H/3, 2H/3) and cols [W/3, 2W/3), floor boundaries.
HsvMeans hsv_means(const HsvImage& hsv);

struct EmotionalCoords {
  double pleasure;
  double arousal;
  double dominance;
};

// Affective coordinates from mean saturation and brightness:
//   P =  0.69 V + 0.22 S
//   A = -0.31 V + 0.60 S
//   D =  0.76 V + 0.32 S
EmotionalCoords emotional_coords(double mean_sat, double mean_val);

struct IttenHistograms {
  std::array<double, 12> hue;
  std::array<double, 5> saturation;
  std::array<double, 3> brightness;
};

// Normalized occurrence histograms over equal-width bins; values at the
// upper channel edge fall into the last bin.
IttenHistograms itten_histograms(const HsvImage& hsv);

// Population standard deviation of each histogram's bin frequencies,
// ordered hue, saturation, brightness.
std::array<double, 3> itten_contrasts(const IttenHistograms& hists);

// Runs every descriptor and assembles the fixed layout. Deterministic:
// identical input yields bit-identical output.
FeatureVector extract_features(const RgbImage& img);

}  // namespace beauty

#endif  // BEAUTY_FEATURES_HPP
