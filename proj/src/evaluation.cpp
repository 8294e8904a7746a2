/*
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "beauty/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "beauty/errors.hpp"

namespace beauty {

RatingMatrix make_rating_matrix(const std::vector<PhotoRecord>& records) {
  RatingMatrix matrix;
  size_t min_count = 0;
  bool any = false;
  for (const PhotoRecord& rec : records) {
    if (rec.judgments.empty()) continue;
    min_count = any ? std::min(min_count, rec.judgments.size()) : rec.judgments.size();
    any = true;
  }
  if (!any) {
    throw insufficient_data_error("rating matrix: no records carry judgments");
  }
  if (min_count < 2) {
    throw insufficient_data_error(
        "rating matrix: need at least 2 judgments per item, minimum found is " +
        std::to_string(min_count));
  }
  matrix.raters = static_cast<int>(min_count);
  for (const PhotoRecord& rec : records) {
    if (rec.judgments.empty()) continue;
    matrix.photo_ids.push_back(rec.photo_id);
    matrix.grades.emplace_back(rec.judgments.begin(),
                               rec.judgments.begin() + min_count);
  }
  return matrix;
}

namespace {

// Average ranks, 1-based; tied values share the mean of their rank span.
std::vector<double> average_ranks(std::span<const double> values) {
  const size_t n = values.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

double mean_of(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc += x;
  return acc / static_cast<double>(v.size());
}

double population_variance(std::span<const double> v) {
  const double mean = mean_of(v);
  double acc = 0.0;
  for (double x : v) acc += (x - mean) * (x - mean);
  return acc / static_cast<double>(v.size());
}

}  // namespace

double spearman(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("spearman: length mismatch, " +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
  if (a.size() < 2) {
    throw std::invalid_argument("spearman: need at least 2 pairs");
  }
  const bool a_constant = std::all_of(a.begin(), a.end(),
                                      [&](double v) { return v == a[0]; });
  const bool b_constant = std::all_of(b.begin(), b.end(),
                                      [&](double v) { return v == b[0]; });
  if (a_constant || b_constant) {
    throw degenerate_input_error("spearman: correlation undefined on a constant list");
  }
  const std::vector<double> ra = average_ranks(a);
  const std::vector<double> rb = average_ranks(b);
  const double ma = mean_of(ra);
  const double mb = mean_of(rb);
  double cov = 0.0, va = 0.0, vb = 0.0;
  for (size_t i = 0; i < ra.size(); ++i) {
    cov += (ra[i] - ma) * (rb[i] - mb);
    va += (ra[i] - ma) * (ra[i] - ma);
    vb += (rb[i] - mb) * (rb[i] - mb);
  }
  return cov / std::sqrt(va * vb);
}

CurvePoint beauty_at_n(std::vector<ScoredPhoto> ranking,
                       const std::unordered_map<std::string, double>& truth,
                       int n) {
  if (n < 1) throw std::invalid_argument("beauty_at_n: n must be >= 1");
  if (ranking.empty()) {
    throw std::invalid_argument("beauty_at_n: empty ranking");
  }
  std::sort(ranking.begin(), ranking.end(),
            [](const ScoredPhoto& a, const ScoredPhoto& b) {
              if (a.predicted != b.predicted) return a.predicted > b.predicted;
              return a.photo_id < b.photo_id;
            });
  const size_t take = std::min(ranking.size(), static_cast<size_t>(n));
  double acc = 0.0;
  for (size_t i = 0; i < take; ++i) {
    const auto it = truth.find(ranking[i].photo_id);
    if (it == truth.end()) {
      throw missing_truth_error("no crowd score for photo '" +
                                ranking[i].photo_id + "'");
    }
    acc += it->second;
  }
  return CurvePoint{n, acc / static_cast<double>(take)};
}

double gini(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("gini: empty input");
  double total = 0.0;
  for (double v : values) {
    if (v < 0.0) throw std::invalid_argument("gini: negative value");
    total += v;
  }
  if (total == 0.0) {
    throw degenerate_input_error("gini: undefined when every value is zero");
  }
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double weighted = 0.0;
  for (size_t i = 0; i < values.size(); ++i) {
    weighted += static_cast<double>(i + 1) * values[i];
  }
  return 2.0 * weighted / (n * total) - (n + 1.0) / n;
}

double matching_percent(const RatingMatrix& matrix) {
  if (matrix.items() == 0 || matrix.raters < 2) {
    throw std::invalid_argument("matching_percent: need items with >= 2 raters");
  }
  double acc = 0.0;
  for (const std::vector<int>& item : matrix.grades) {
    int counts[6] = {0, 0, 0, 0, 0, 0};
    for (int g : item) ++counts[g];
    int mode = 1;
    for (int g = 2; g <= 5; ++g) {
      if (counts[g] > counts[mode]) mode = g;  // ties stay on the lower grade
    }
    acc += static_cast<double>(counts[mode]) / static_cast<double>(item.size());
  }
  return acc / static_cast<double>(matrix.items()) * 100.0;
}

double fleiss_kappa_binarized(const RatingMatrix& matrix) {
  if (matrix.items() == 0 || matrix.raters < 2) {
    throw std::invalid_argument("fleiss_kappa_binarized: need items with >= 2 raters");
  }
  std::vector<int> all;
  for (const std::vector<int>& item : matrix.grades) {
    all.insert(all.end(), item.begin(), item.end());
  }
  std::sort(all.begin(), all.end());
  const size_t total = all.size();
  const double median =
      total % 2 == 1
          ? static_cast<double>(all[total / 2])
          : (static_cast<double>(all[total / 2 - 1]) + static_cast<double>(all[total / 2])) / 2.0;

  const double m = static_cast<double>(matrix.raters);
  size_t beautiful_total = 0;
  double p_bar = 0.0;
  for (const std::vector<int>& item : matrix.grades) {
    size_t b = 0;
    for (int g : item) {
      if (static_cast<double>(g) > median) ++b;
    }
    beautiful_total += b;
    const double bd = static_cast<double>(b);
    p_bar += (bd * (bd - 1.0) + (m - bd) * (m - bd - 1.0)) / (m * (m - 1.0));
  }
  if (beautiful_total == 0 || beautiful_total == total) {
    throw degenerate_input_error(
        "fleiss: one label empty after median binarization, kappa undefined");
  }
  p_bar /= static_cast<double>(matrix.items());
  const double p1 = static_cast<double>(beautiful_total) / static_cast<double>(total);
  const double p_e = p1 * p1 + (1.0 - p1) * (1.0 - p1);
  return (p_bar - p_e) / (1.0 - p_e);
}

double cronbach_alpha(const RatingMatrix& matrix) {
  if (matrix.items() < 2 || matrix.raters < 2) {
    throw std::invalid_argument("cronbach_alpha: need >= 2 items and >= 2 raters");
  }
  const size_t n = matrix.items();
  const int m = matrix.raters;
  double column_variance_sum = 0.0;
  std::vector<double> column(n);
  for (int slot = 0; slot < m; ++slot) {
    for (size_t i = 0; i < n; ++i) column[i] = matrix.grades[i][slot];
    column_variance_sum += population_variance(column);
  }
  std::vector<double> row_sums(n, 0.0);
  for (size_t i = 0; i < n; ++i) {
    for (int g : matrix.grades[i]) row_sums[i] += g;
  }
  const double row_variance = population_variance(row_sums);
  if (row_variance == 0.0) {
    throw degenerate_input_error("cronbach: zero row-sum variance, alpha undefined");
  }
  return static_cast<double>(m) / (m - 1.0) * (1.0 - column_variance_sum / row_variance);
}

}  // namespace beauty
