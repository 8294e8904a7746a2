/*
 * Feature standardization and partial least squares regression.
 *
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef BEAUTY_REGRESSION_HPP
#define BEAUTY_REGRESSION_HPP

#include <array>
#include <string>
#include <vector>

#include "beauty/features.hpp"

namespace beauty {

constexpr int kDefaultComponents = 15;

// Per-feature z-score parameters. Zero-variance features keep scale 1 so
// standardization never divides by zero and such features stay inert.
struct StandardizationStats {
  std::array<double, kFeatureDim> means{};
  std::array<double, kFeatureDim> scales{};
};

// Population mean/std per feature; requires at least 2 samples.
StandardizationStats fit_standardization(const std::vector<FeatureVector>& X);

// A trained per-category scorer: standardization parameters plus the
// folded regression coefficients in standardized-feature space.
struct AestheticModel {
  std::string layout_version;
  std::string category;
  int components = kDefaultComponents;  // effective count used by the fit
  StandardizationStats stats;
  std::array<double, kFeatureDim> coefficients{};
  double intercept = 0.0;
};

// Fits a PLS1 model: standardizes X, centers y, and runs the NIPALS
// iteration up to `components` times, deflating X and y after each
// extracted direction. The per-component weights are folded into one
// coefficient vector. Extraction stops early when the residual X norm
// drops below 1e-10; a constant y yields the constant model (zero
// coefficients, intercept = mean y).
//
// Requires |X| == |y| >= components + 1 and 1 <= components <= kFeatureDim.
AestheticModel plsr_fit(const std::vector<FeatureVector>& X,
                        const std::vector<double>& y, int components,
                        const std::string& category);

// score = ((x - means) / scales) . coefficients + intercept. The raw value
// is returned unclamped; ranking happens downstream. Throws
// layout_mismatch_error when the model was built for another layout.
double plsr_predict(const AestheticModel& model, const FeatureVector& x);

// UTF-8 key-value document, reals at 17 significant digits so values
// round-trip exactly.
std::string save_model(const AestheticModel& model);
AestheticModel load_model(const std::string& bytes);

void save_model_file(const std::string& path, const AestheticModel& model);
AestheticModel load_model_file(const std::string& path);

}  // namespace beauty

#endif  // BEAUTY_REGRESSION_HPP
