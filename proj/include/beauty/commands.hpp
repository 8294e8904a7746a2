/*
 * Command implementations behind the beautyrank CLI. Each command reads and
 * writes files (CSV tables, model documents) so every pipeline stage can be
 * run, inspected, and resumed independently.
 *
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef BEAUTY_COMMANDS_HPP_
#define BEAUTY_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "beauty/evaluation.hpp"
#include "beauty/features.hpp"
#include "beauty/regression.hpp"

namespace beauty {

// Process exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitThreshold = 3;

// One row of the feature table.
struct FeatureRow {
  std::string photo_id;
  FeatureVector features{};
};

// Feature CSV: header photo_id,f0,...,f46, reals at 9 significant digits.
void save_features_file(const std::string& path,
                        const std::vector<FeatureRow>& rows);
std::vector<FeatureRow> load_features_file(const std::string& path);

// Scores CSV: header photo_id,predicted, reals at 17 significant digits so
// a written score reloads to the same double.
void save_scores_file(const std::string& path,
                      const std::vector<ScoredPhoto>& rows);
std::vector<ScoredPhoto> load_scores_file(const std::string& path);

// Relative manifest paths resolve against the manifest file's directory.
std::string resolve_against(const std::string& base_file,
                            const std::string& path);

struct ExtractOptions {
  std::string manifest_path;
  std::string out_path;
  int jobs = 1;
};

// Extracts features for every decodable manifest image, in parallel across
// `jobs` threads. Output rows are sorted by photo_id, so the bytes written
// do not depend on the thread count. Failures are logged to `diagnostics`
// with the photo id and skipped; when more than 10% of the images fail the
// exit code is kExitThreshold.
int cmd_extract(const ExtractOptions& opt, std::ostream& diagnostics);

struct TrainOptions {
  std::string features_path;
  std::string manifest_path;
  std::string category;
  int components = kDefaultComponents;
  uint64_t seed = 42;
  size_t test_size = 800;
  std::string out_path;
  std::string split_out_path;  // empty means out_path + ".split"
};

// Splits the category into a tail-drawn test set and a train set over all
// buckets, fits the aesthetic model on the train rows, and writes the model
// document plus a split record file holding one test photo_id per line.
int cmd_train(const TrainOptions& opt, std::ostream& diagnostics);

struct ScoreOptions {
  std::string model_path;
  std::string features_path;
  std::string out_path;
};

// Predicts a score for every feature row, preserving input order.
int cmd_score(const ScoreOptions& opt, std::ostream& diagnostics);

struct SurfaceOptions {
  std::string scores_path;
  std::string manifest_path;
  std::string bucket = "tail";
  size_t top = 10;
  std::string out_path;
};

// Joins scores to the manifest, keeps the requested popularity bucket, and
// writes the top N by predicted score (ties broken by photo_id) as CSV with
// header photo_id,predicted,rank,category,bucket and 1-based ranks.
int cmd_surface(const SurfaceOptions& opt, std::ostream& diagnostics);

struct EvalOptions {
  std::string scores_path;    // unused by the gini metric
  std::string manifest_path;
  std::string metric;         // spearman | beauty-at-n | gini
  std::string category;       // empty means all categories
  std::string out_path;       // empty means write to the report stream
};

// Emits a metric report. spearman and gini write `category,metric,value`
// rows; beauty-at-n writes an `n,mean_beauty` curve for n in [5,100] step 5.
int cmd_eval(const EvalOptions& opt, std::ostream& report,
             std::ostream& diagnostics);

struct AgreementOptions {
  std::string manifest_path;
  std::string metric;  // matching | fleiss | cronbach
};

// Computes one inter-rater agreement statistic over the manifest judgments
// and writes a `metric,value` report.
int cmd_agreement(const AgreementOptions& opt, std::ostream& report,
                  std::ostream& diagnostics);

}  // namespace beauty

#endif  // BEAUTY_COMMANDS_HPP_
