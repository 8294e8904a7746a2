/*
 * Spectral-residual saliency.
 *
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "beauty/saliency.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace beauty {

namespace {

constexpr int kN = kSaliencySide;
constexpr double kLogEpsilon = 1e-8;
constexpr double kBlurSigma = 2.5;
constexpr int kBlurRadius = 8;

using Complex = std::complex<double>;
using Grid = std::vector<Complex>;

// Direct table-driven DFT; n = 96 keeps this well inside budget and the
// plain loops make the result bit-reproducible.
class Dft1d {
 public:
  explicit Dft1d(int n) : n_(n), twiddle_(n) {
    for (int j = 0; j < n; ++j) {
      const double angle = -2.0 * std::numbers::pi * j / n;
      twiddle_[j] = Complex(std::cos(angle), std::sin(angle));
    }
  }

  void forward(const Complex* in, Complex* out, int in_stride) const {
    transform(in, out, in_stride, false);
  }

  void inverse(const Complex* in, Complex* out, int in_stride) const {
    transform(in, out, in_stride, true);
  }

 private:
  // Reads n_ samples spaced in_stride apart; writes the spectrum densely.
  void transform(const Complex* in, Complex* out, int in_stride, bool inv) const {
    for (int k = 0; k < n_; ++k) {
      Complex acc(0.0, 0.0);
      for (int j = 0; j < n_; ++j) {
        Complex w = twiddle_[(static_cast<long long>(k) * j) % n_];
        if (inv) w = std::conj(w);
        acc += in[static_cast<size_t>(j) * in_stride] * w;
      }
      if (inv) acc /= static_cast<double>(n_);
      out[k] = acc;
    }
  }

  int n_;
  std::vector<Complex> twiddle_;
};

void dft2d(Grid& grid, bool inverse) {
  static const Dft1d dft(kN);
  std::vector<Complex> scratch(kN);
  for (int y = 0; y < kN; ++y) {
    Complex* row = grid.data() + static_cast<size_t>(y) * kN;
    if (inverse) {
      dft.inverse(row, scratch.data(), 1);
    } else {
      dft.forward(row, scratch.data(), 1);
    }
    std::copy(scratch.begin(), scratch.end(), row);
  }
  for (int x = 0; x < kN; ++x) {
    Complex* col = grid.data() + x;
    if (inverse) {
      dft.inverse(col, scratch.data(), kN);
    } else {
      dft.forward(col, scratch.data(), kN);
    }
    for (int y = 0; y < kN; ++y) col[static_cast<size_t>(y) * kN] = scratch[y];
  }
}

// 3x3 mean with replicated borders.
std::vector<double> box_mean3(const std::vector<double>& in) {
  std::vector<double> out(in.size());
  auto clamped = [&in](int y, int x) {
    y = std::clamp(y, 0, kN - 1);
    x = std::clamp(x, 0, kN - 1);
    return in[static_cast<size_t>(y) * kN + x];
  };
  for (int y = 0; y < kN; ++y) {
    for (int x = 0; x < kN; ++x) {
      double acc = 0.0;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) acc += clamped(y + dy, x + dx);
      }
      out[static_cast<size_t>(y) * kN + x] = acc / 9.0;
    }
  }
  return out;
}

// Separable Gaussian, replicated borders, kernel normalized to unit sum.
std::vector<double> gaussian_blur(const std::vector<double>& in) {
  std::array<double, 2 * kBlurRadius + 1> kernel;
  double sum = 0.0;
  for (int i = -kBlurRadius; i <= kBlurRadius; ++i) {
    const double w = std::exp(-(i * i) / (2.0 * kBlurSigma * kBlurSigma));
    kernel[i + kBlurRadius] = w;
    sum += w;
  }
  for (double& w : kernel) w /= sum;

  std::vector<double> tmp(in.size()), out(in.size());
  for (int y = 0; y < kN; ++y) {
    for (int x = 0; x < kN; ++x) {
      double acc = 0.0;
      for (int i = -kBlurRadius; i <= kBlurRadius; ++i) {
        const int xi = std::clamp(x + i, 0, kN - 1);
        acc += kernel[i + kBlurRadius] * in[static_cast<size_t>(y) * kN + xi];
      }
      tmp[static_cast<size_t>(y) * kN + x] = acc;
    }
  }
  for (int y = 0; y < kN; ++y) {
    for (int x = 0; x < kN; ++x) {
      double acc = 0.0;
      for (int i = -kBlurRadius; i <= kBlurRadius; ++i) {
        const int yi = std::clamp(y + i, 0, kN - 1);
        acc += kernel[i + kBlurRadius] * tmp[static_cast<size_t>(yi) * kN + x];
      }
      out[static_cast<size_t>(y) * kN + x] = acc;
    }
  }
  return out;
}

}  // namespace

SaliencyMap spectral_saliency(const GrayImage& img) {
  // A featureless input maps to all zeros by convention. Checked on the
  // source raster: resampling a constant can introduce sub-ulp ripple that
  // min-max normalization would blow up into arbitrary structure.
  if (!img.v.empty()) {
    const auto [mn, mx] = std::minmax_element(img.v.begin(), img.v.end());
    if (*mn == *mx) {
      SaliencyMap zero;
      zero.v.assign(static_cast<size_t>(kN) * kN, 0.0);
      return zero;
    }
  }

  const GrayImage small = resize_square(img, kN);

  Grid spectrum(static_cast<size_t>(kN) * kN);
  for (size_t i = 0; i < spectrum.size(); ++i) spectrum[i] = Complex(small.v[i], 0.0);
  dft2d(spectrum, false);

  std::vector<double> log_amp(spectrum.size()), phase(spectrum.size());
  for (size_t i = 0; i < spectrum.size(); ++i) {
    log_amp[i] = std::log(std::abs(spectrum[i]) + kLogEpsilon);
    phase[i] = std::arg(spectrum[i]);
  }

  const std::vector<double> smoothed = box_mean3(log_amp);
  for (size_t i = 0; i < spectrum.size(); ++i) {
    const double residual = log_amp[i] - smoothed[i];
    const double amp = std::exp(residual);
    spectrum[i] = Complex(amp * std::cos(phase[i]), amp * std::sin(phase[i]));
  }
  dft2d(spectrum, true);

  std::vector<double> energy(spectrum.size());
  for (size_t i = 0; i < spectrum.size(); ++i) energy[i] = std::norm(spectrum[i]);
  energy = gaussian_blur(energy);

  const auto [lo_it, hi_it] = std::minmax_element(energy.begin(), energy.end());
  const double lo = *lo_it, hi = *hi_it;
  SaliencyMap map;
  map.v.assign(energy.size(), 0.0);
  if (hi > lo) {
    for (size_t i = 0; i < energy.size(); ++i) map.v[i] = (energy[i] - lo) / (hi - lo);
  }
  return map;
}

std::array<double, 9> thirds_saliency(const SaliencyMap& map) {
  constexpr int kBlock = kSaliencySide / 3;
  std::array<double, 9> means{};
  for (int br = 0; br < 3; ++br) {
    for (int bc = 0; bc < 3; ++bc) {
      double acc = 0.0;
      for (int y = br * kBlock; y < (br + 1) * kBlock; ++y) {
        for (int x = bc * kBlock; x < (bc + 1) * kBlock; ++x) acc += map.at(y, x);
      }
      means[static_cast<size_t>(br) * 3 + bc] = acc / (kBlock * kBlock);
    }
  }
  return means;
}

}  // namespace beauty
