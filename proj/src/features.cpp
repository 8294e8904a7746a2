/*
 * Color descriptors and assembly of the 47-dimensional feature vector.
 *
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "beauty/features.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace beauty {

namespace {

constexpr double kMeanLuminanceFloor = 1e-8;
constexpr double kResultantFloor = 1e-9;

struct Region {
  int y0, y1, x0, x1;  // half-open
};

// Circular mean of hue plus arithmetic means of saturation and value over
// one rectangular region.
void region_means(const HsvImage& hsv, const Region& r, double& mean_h,
                  double& mean_s, double& mean_v) {
  double sin_sum = 0.0, cos_sum = 0.0, s_sum = 0.0, v_sum = 0.0;
  const double two_pi = 2.0 * std::numbers::pi;
  size_t count = 0;
  for (int y = r.y0; y < r.y1; ++y) {
    for (int x = r.x0; x < r.x1; ++x) {
      const size_t i = static_cast<size_t>(y) * hsv.width + x;
      sin_sum += std::sin(two_pi * hsv.h[i]);
      cos_sum += std::cos(two_pi * hsv.h[i]);
      s_sum += hsv.s[i];
      v_sum += hsv.v[i];
      ++count;
    }
  }
  const double n = static_cast<double>(count);
  const double resultant = std::sqrt(sin_sum * sin_sum + cos_sum * cos_sum) / n;
  if (resultant < kResultantFloor) {
    mean_h = 0.0;
  } else {
    double h = std::atan2(sin_sum, cos_sum) / two_pi;
    if (h < 0.0) h += 1.0;
    if (h >= 1.0) h = 0.0;
    mean_h = h;
  }
  mean_s = s_sum / n;
  mean_v = v_sum / n;
}

int bin_of(double value, int bins) {
  const int b = static_cast<int>(std::floor(value * bins));
  return std::min(b, bins - 1);
}

template <size_t N>
double population_std(const std::array<double, N>& values) {
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= N;
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  return std::sqrt(var / N);
}

}  // namespace

double contrast_metric(const GrayImage& gray) {
  double lo = gray.v[0], hi = gray.v[0], sum = 0.0;
  for (double y : gray.v) {
    lo = std::min(lo, y);
    hi = std::max(hi, y);
    sum += y;
  }
  const double mean = sum / static_cast<double>(gray.v.size());
  if (mean < kMeanLuminanceFloor) return 0.0;
  return (hi - lo) / mean;
}

HsvMeans hsv_means(const HsvImage& hsv) {
  HsvMeans m{};
  region_means(hsv, Region{0, hsv.height, 0, hsv.width}, m.hue, m.sat, m.val);
  const Region inner{hsv.height / 3, 2 * hsv.height / 3, hsv.width / 3,
                     2 * hsv.width / 3};
  region_means(hsv, inner, m.inner_hue, m.inner_sat, m.inner_val);
  return m;
}

EmotionalCoords emotional_coords(double mean_sat, double mean_val) {
  return EmotionalCoords{
      0.69 * mean_val + 0.22 * mean_sat,
      -0.31 * mean_val + 0.60 * mean_sat,
      0.76 * mean_val + 0.32 * mean_sat,
  };
}

IttenHistograms itten_histograms(const HsvImage& hsv) {
  IttenHistograms hists{};
  hists.hue.fill(0.0);
  hists.saturation.fill(0.0);
  hists.brightness.fill(0.0);
  const size_t n = hsv.pixel_count();
  for (size_t i = 0; i < n; ++i) {
    hists.hue[bin_of(hsv.h[i], 12)] += 1.0;
    hists.saturation[bin_of(hsv.s[i], 5)] += 1.0;
    hists.brightness[bin_of(hsv.v[i], 3)] += 1.0;
  }
  const double inv = 1.0 / static_cast<double>(n);
  for (double& f : hists.hue) f *= inv;
  for (double& f : hists.saturation) f *= inv;
  for (double& f : hists.brightness) f *= inv;
  return hists;
}

std::array<double, 3> itten_contrasts(const IttenHistograms& hists) {
  return {population_std(hists.hue), population_std(hists.saturation),
          population_std(hists.brightness)};
}

FeatureVector extract_features(const RgbImage& img) {
  const GrayImage gray = to_luminance(img);
  const HsvImage hsv = to_hsv(img);

  FeatureVector f{};
  f[kFContrast] = contrast_metric(gray);

  const HsvMeans means = hsv_means(hsv);
  f[kFMeanHue] = means.hue;
  f[kFMeanSat] = means.sat;
  f[kFMeanVal] = means.val;
  f[kFInnerHue] = means.inner_hue;
  f[kFInnerSat] = means.inner_sat;
  f[kFInnerVal] = means.inner_val;

  const EmotionalCoords pad = emotional_coords(means.sat, means.val);
  f[kFPleasure] = pad.pleasure;
  f[kFArousal] = pad.arousal;
  f[kFDominance] = pad.dominance;

  const IttenHistograms hists = itten_histograms(hsv);
  for (int i = 0; i < 12; ++i) f[kFHueHist + i] = hists.hue[i];
  for (int i = 0; i < 5; ++i) f[kFSatHist + i] = hists.saturation[i];
  for (int i = 0; i < 3; ++i) f[kFValHist + i] = hists.brightness[i];

  const std::array<double, 3> contrasts = itten_contrasts(hists);
  for (int i = 0; i < 3; ++i) f[kFHistContrast + i] = contrasts[i];

  f[kFSymmetry] = symmetry(gray);

  const std::array<double, 9> thirds = thirds_saliency(spectral_saliency(gray));
  for (int i = 0; i < 9; ++i) f[kFThirds + i] = thirds[i];

  const HaralickStats texture = haralick(glcm(gray));
  f[kFTexture + 0] = texture.entropy;
  f[kFTexture + 1] = texture.energy;
  f[kFTexture + 2] = texture.homogeneity;
  f[kFTexture + 3] = texture.contrast;
  return f;
}

}  // namespace beauty
