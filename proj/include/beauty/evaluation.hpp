/*
 * Ranking and agreement metrics: Spearman correlation, beauty@n curves,
 * Gini coefficient, and inter-rater statistics over crowd judgments.
 *
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef BEAUTY_EVALUATION_HPP_
#define BEAUTY_EVALUATION_HPP_

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "beauty/corpus.hpp"

namespace beauty {

// Complete items-by-raters grid of integer grades in [1, 5]. Every item
// carries exactly `raters` grades, so chance-corrected agreement statistics
// that assume a fixed rater count apply directly.
struct RatingMatrix {
  std::vector<std::string> photo_ids;
  std::vector<std::vector<int>> grades;  // grades[item][slot], each in [1, 5]
  int raters = 0;

  size_t items() const { return grades.size(); }
};

// Builds a complete grid from scored records. Records without judgments are
// ignored; every remaining item is truncated to the corpus-wide minimum
// judgment count, keeping the first judgments in stored order. Throws
// insufficient_data_error when fewer than 2 judgments per item survive or
// no scored records exist.
RatingMatrix make_rating_matrix(const std::vector<PhotoRecord>& records);

// One point of a mean-beauty-versus-cutoff curve.
struct CurvePoint {
  int n = 0;  // cutoff, >= 1
  double mean_beauty = 0.0;
};

// A prediction attached to its photo id, the unit of ranking.
struct ScoredPhoto {
  std::string photo_id;
  double predicted = 0.0;
};

// Rank correlation using average ranks for ties (Pearson correlation of the
// rank vectors). Requires |a| == |b| >= 2. Throws degenerate_input_error
// when either list is constant, where the correlation is undefined.
double spearman(std::span<const double> a, std::span<const double> b);

// Mean crowd score of the top-n photos ordered by predicted value
// descending, ties broken by photo_id ascending. n past the list length
// averages the whole list. Throws missing_truth_error naming the first
// ranked photo id absent from `truth`.
CurvePoint beauty_at_n(std::vector<ScoredPhoto> ranking,
                       const std::unordered_map<std::string, double>& truth,
                       int n);

// Gini concentration coefficient of a non-negative distribution, computed
// with the sorted cumulative-share formula; result lies in [0, 1). Throws
// degenerate_input_error when every value is zero.
double gini(std::vector<double> values);

// Mean share of judgments that equal each item's modal grade, times 100.
// Modal ties resolve toward the lower grade.
double matching_percent(const RatingMatrix& matrix);

// Fleiss' kappa after binarizing every grade against the global median of
// all grades (strictly greater counts as Beautiful). Throws
// degenerate_input_error when binarization leaves one label unused.
double fleiss_kappa_binarized(const RatingMatrix& matrix);

// Cronbach's alpha over judgment-slot columns with population variances:
// alpha = m/(m-1) * (1 - sum of column variances / variance of row sums).
// Requires at least 2 items; throws degenerate_input_error when the row-sum
// variance is zero.
double cronbach_alpha(const RatingMatrix& matrix);

}  // namespace beauty

#endif  // BEAUTY_EVALUATION_HPP_
