/*
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "beauty/commands.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "beauty/corpus.hpp"
#include "beauty/csv.hpp"
#include "beauty/errors.hpp"
#include "beauty/image.hpp"
#include "beauty/num.hpp"

namespace beauty {

namespace {

constexpr int kFeatureDigits = 9;
constexpr int kScoreDigits = 17;
constexpr int kReportDigits = 9;

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open " + path + " for writing");
  return out;
}

std::vector<CsvRecord> read_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  return read_csv(in);
}

bool blank_record(const CsvRecord& record) {
  return record.size() == 1 && record[0].empty();
}

std::string feature_header_field(int j) { return "f" + std::to_string(j); }

// Joins manifest records by photo_id, rejecting duplicates so the join is
// unambiguous.
std::unordered_map<std::string, const PhotoRecord*> index_by_id(
    const std::vector<PhotoRecord>& records) {
  std::unordered_map<std::string, const PhotoRecord*> map;
  map.reserve(records.size());
  for (const PhotoRecord& rec : records) {
    if (!map.emplace(rec.photo_id, &rec).second) {
      throw validation_error("duplicate photo_id '" + rec.photo_id +
                             "' in manifest");
    }
  }
  return map;
}

}  // namespace

std::string resolve_against(const std::string& base_file,
                            const std::string& path) {
  const std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(base_file).parent_path() / p).string();
}

void save_features_file(const std::string& path,
                        const std::vector<FeatureRow>& rows) {
  std::ofstream out = open_output(path);
  CsvRecord header{"photo_id"};
  for (int j = 0; j < kFeatureDim; ++j) header.push_back(feature_header_field(j));
  write_csv_record(out, header);
  for (const FeatureRow& row : rows) {
    CsvRecord record{row.photo_id};
    for (double v : row.features) record.push_back(format_real(v, kFeatureDigits));
    write_csv_record(out, record);
  }
  if (!out) throw io_error("write failed: " + path);
}

std::vector<FeatureRow> load_features_file(const std::string& path) {
  const std::vector<CsvRecord> table = read_csv_file(path);
  if (table.empty()) throw parse_error(path + ": missing feature header");
  CsvRecord expected{"photo_id"};
  for (int j = 0; j < kFeatureDim; ++j) expected.push_back(feature_header_field(j));
  if (table[0] != expected) {
    throw parse_error(path + ": unexpected feature header");
  }
  std::vector<FeatureRow> rows;
  for (size_t i = 1; i < table.size(); ++i) {
    const CsvRecord& record = table[i];
    if (blank_record(record)) continue;
    if (record.size() != static_cast<size_t>(kFeatureDim) + 1) {
      throw parse_error(path + ": row " + std::to_string(i) + " has " +
                        std::to_string(record.size()) + " fields, expected " +
                        std::to_string(kFeatureDim + 1));
    }
    FeatureRow row;
    row.photo_id = record[0];
    for (int j = 0; j < kFeatureDim; ++j) {
      const auto v = parse_real(record[j + 1]);
      if (!v) {
        throw parse_error(path + ": row " + std::to_string(i) +
                          ": bad real '" + record[j + 1] + "'");
      }
      row.features[j] = *v;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void save_scores_file(const std::string& path,
                      const std::vector<ScoredPhoto>& rows) {
  std::ofstream out = open_output(path);
  write_csv_record(out, {"photo_id", "predicted"});
  for (const ScoredPhoto& row : rows) {
    write_csv_record(out, {row.photo_id, format_real(row.predicted, kScoreDigits)});
  }
  if (!out) throw io_error("write failed: " + path);
}

std::vector<ScoredPhoto> load_scores_file(const std::string& path) {
  const std::vector<CsvRecord> table = read_csv_file(path);
  if (table.empty() || table[0] != CsvRecord{"photo_id", "predicted"}) {
    throw parse_error(path + ": expected header photo_id,predicted");
  }
  std::vector<ScoredPhoto> rows;
  for (size_t i = 1; i < table.size(); ++i) {
    const CsvRecord& record = table[i];
    if (blank_record(record)) continue;
    if (record.size() != 2) {
      throw parse_error(path + ": row " + std::to_string(i) +
                        " has " + std::to_string(record.size()) + " fields");
    }
    const auto v = parse_real(record[1]);
    if (!v) {
      throw parse_error(path + ": row " + std::to_string(i) + ": bad real '" +
                        record[1] + "'");
    }
    rows.push_back(ScoredPhoto{record[0], *v});
  }
  return rows;
}

int cmd_extract(const ExtractOptions& opt, std::ostream& diagnostics) {
  const std::vector<PhotoRecord> records = load_manifest_file(opt.manifest_path);
  const size_t total = records.size();
  std::vector<std::optional<FeatureRow>> done(total);
  std::vector<std::string> failure(total);

  std::atomic<size_t> next{0};
  const auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= total) return;
      try {
        const RgbImage img =
            decode_file(resolve_against(opt.manifest_path, records[i].path));
        done[i] = FeatureRow{records[i].photo_id, extract_features(img)};
      } catch (const std::exception& e) {
        failure[i] = e.what();
      }
    }
  };

  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::vector<FeatureRow> rows;
  size_t failed = 0;
  for (size_t i = 0; i < total; ++i) {
    if (done[i]) {
      rows.push_back(std::move(*done[i]));
    } else {
      ++failed;
      diagnostics << "warning: skipped '" << records[i].photo_id
                  << "': " << failure[i] << '\n';
    }
  }
  // Sorting by photo_id makes the output independent of thread scheduling;
  // equal ids keep manifest order.
  std::stable_sort(rows.begin(), rows.end(),
                   [](const FeatureRow& a, const FeatureRow& b) {
                     return a.photo_id < b.photo_id;
                   });
  save_features_file(opt.out_path, rows);

  if (10 * failed > total) {
    diagnostics << "error: " << failed << " of " << total
                << " images failed to decode, over the 10% threshold\n";
    return kExitThreshold;
  }
  return kExitOk;
}

int cmd_train(const TrainOptions& opt, std::ostream& diagnostics) {
  if (!is_known_category(opt.category)) {
    throw validation_error("unknown category '" + opt.category + "'");
  }
  const std::vector<PhotoRecord> records = load_manifest_file(opt.manifest_path);
  const std::vector<FeatureRow> feature_rows = load_features_file(opt.features_path);
  std::unordered_map<std::string, const FeatureVector*> features;
  features.reserve(feature_rows.size());
  for (const FeatureRow& row : feature_rows) {
    if (!features.emplace(row.photo_id, &row.features).second) {
      throw validation_error("duplicate photo_id '" + row.photo_id +
                             "' in feature table");
    }
  }

  const TrainTestSplit split =
      split_train_test(records, opt.category, opt.test_size, opt.seed);

  std::vector<FeatureVector> X;
  std::vector<double> y;
  X.reserve(split.train.size());
  y.reserve(split.train.size());
  for (const PhotoRecord& rec : split.train) {
    if (!rec.mean_score) {
      throw validation_error("photo '" + rec.photo_id +
                             "' has no crowd score; cannot train on it");
    }
    const auto it = features.find(rec.photo_id);
    if (it == features.end()) {
      throw missing_join_error("photo '" + rec.photo_id +
                               "' absent from the feature table");
    }
    X.push_back(*it->second);
    y.push_back(*rec.mean_score);
  }

  const AestheticModel model = plsr_fit(X, y, opt.components, opt.category);
  save_model_file(opt.out_path, model);

  const std::string split_path =
      opt.split_out_path.empty() ? opt.out_path + ".split" : opt.split_out_path;
  std::ofstream split_out = open_output(split_path);
  for (const PhotoRecord& rec : split.test) split_out << rec.photo_id << '\n';
  if (!split_out) throw io_error("write failed: " + split_path);

  diagnostics << "trained '" << opt.category << "' on " << split.train.size()
              << " photos with " << model.components << " components; "
              << split.test.size() << " test photos recorded\n";
  return kExitOk;
}

int cmd_score(const ScoreOptions& opt, std::ostream&) {
  const AestheticModel model = load_model_file(opt.model_path);
  const std::vector<FeatureRow> rows = load_features_file(opt.features_path);
  std::vector<ScoredPhoto> scores;
  scores.reserve(rows.size());
  for (const FeatureRow& row : rows) {
    scores.push_back(ScoredPhoto{row.photo_id, plsr_predict(model, row.features)});
  }
  save_scores_file(opt.out_path, scores);
  return kExitOk;
}

int cmd_surface(const SurfaceOptions& opt, std::ostream& diagnostics) {
  const auto bucket = bucket_from_string(opt.bucket);
  if (!bucket) {
    throw validation_error("unknown bucket '" + opt.bucket + "'");
  }
  const std::vector<ScoredPhoto> scores = load_scores_file(opt.scores_path);
  const std::vector<PhotoRecord> records = load_manifest_file(opt.manifest_path);
  const auto by_id = index_by_id(records);

  struct Candidate {
    ScoredPhoto scored;
    const PhotoRecord* record;
  };
  std::vector<Candidate> candidates;
  for (const ScoredPhoto& s : scores) {
    const auto it = by_id.find(s.photo_id);
    if (it == by_id.end()) {
      throw missing_join_error("scored photo '" + s.photo_id +
                               "' not in manifest");
    }
    if (popularity_bucket(it->second->favorites) == *bucket) {
      candidates.push_back(Candidate{s, it->second});
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.scored.predicted != b.scored.predicted) {
                return a.scored.predicted > b.scored.predicted;
              }
              return a.scored.photo_id < b.scored.photo_id;
            });
  if (candidates.size() > opt.top) candidates.resize(opt.top);

  std::ofstream out = open_output(opt.out_path);
  write_csv_record(out, {"photo_id", "predicted", "rank", "category", "bucket"});
  for (size_t i = 0; i < candidates.size(); ++i) {
    const Candidate& c = candidates[i];
    write_csv_record(out, {c.scored.photo_id,
                           format_real(c.scored.predicted, kScoreDigits),
                           std::to_string(i + 1), c.record->category,
                           to_string(*bucket)});
  }
  if (!out) throw io_error("write failed: " + opt.out_path);

  if (candidates.empty()) {
    diagnostics << "warning: no scored photos fall in the '" << opt.bucket
                << "' bucket\n";
  }
  return kExitOk;
}

namespace {

// Pairs every prediction with its manifest record, optionally keeping one
// category. Prediction ids missing from the manifest are join errors;
// selected rows without a crowd score are truth errors.
struct EvalJoin {
  std::vector<ScoredPhoto> ranking;
  std::vector<double> predicted;
  std::vector<double> truth;
  std::unordered_map<std::string, double> truth_by_id;
};

EvalJoin join_scores_with_truth(const std::vector<ScoredPhoto>& scores,
                                const std::vector<PhotoRecord>& records,
                                const std::string& category) {
  const auto by_id = index_by_id(records);
  EvalJoin join;
  for (const ScoredPhoto& s : scores) {
    const auto it = by_id.find(s.photo_id);
    if (it == by_id.end()) {
      throw missing_join_error("scored photo '" + s.photo_id +
                               "' not in manifest");
    }
    const PhotoRecord& rec = *it->second;
    if (!category.empty() && rec.category != category) continue;
    if (!rec.mean_score) {
      throw missing_truth_error("no crowd score for photo '" + s.photo_id + "'");
    }
    join.ranking.push_back(s);
    join.predicted.push_back(s.predicted);
    join.truth.push_back(*rec.mean_score);
    join.truth_by_id.emplace(s.photo_id, *rec.mean_score);
  }
  return join;
}

}  // namespace

int cmd_eval(const EvalOptions& opt, std::ostream& report,
             std::ostream& diagnostics) {
  const bool needs_scores = opt.metric != "gini";
  if (needs_scores && opt.scores_path.empty()) {
    diagnostics << "usage: metric '" << opt.metric << "' requires --scores\n";
    return kExitUsage;
  }
  std::vector<PhotoRecord> records = load_manifest_file(opt.manifest_path);
  if (!opt.category.empty()) {
    if (!is_known_category(opt.category)) {
      throw validation_error("unknown category '" + opt.category + "'");
    }
  }
  const std::string label = opt.category.empty() ? "all" : opt.category;

  std::ofstream file;
  std::ostream* sink = &report;
  if (!opt.out_path.empty()) {
    file = open_output(opt.out_path);
    sink = &file;
  }

  if (opt.metric == "spearman") {
    const EvalJoin join = join_scores_with_truth(
        load_scores_file(opt.scores_path), records, opt.category);
    if (join.predicted.size() < 2) {
      throw insufficient_data_error(
          "spearman needs at least 2 scored photos with truth, got " +
          std::to_string(join.predicted.size()));
    }
    const double rho = spearman(join.predicted, join.truth);
    write_csv_record(*sink, {"category", "metric", "value"});
    write_csv_record(*sink, {label, "spearman", format_real(rho, kReportDigits)});
  } else if (opt.metric == "beauty-at-n") {
    const EvalJoin join = join_scores_with_truth(
        load_scores_file(opt.scores_path), records, opt.category);
    if (join.ranking.empty()) {
      throw insufficient_data_error("no scored photos matched the manifest");
    }
    write_csv_record(*sink, {"n", "mean_beauty"});
    for (int n = 5; n <= 100; n += 5) {
      const CurvePoint point = beauty_at_n(join.ranking, join.truth_by_id, n);
      write_csv_record(*sink, {std::to_string(point.n),
                               format_real(point.mean_beauty, kReportDigits)});
    }
  } else if (opt.metric == "gini") {
    std::vector<double> favorites;
    for (const PhotoRecord& rec : records) {
      if (!opt.category.empty() && rec.category != opt.category) continue;
      favorites.push_back(static_cast<double>(rec.favorites));
    }
    if (favorites.empty()) {
      throw insufficient_data_error("no manifest rows matched the category");
    }
    const double g = gini(std::move(favorites));
    write_csv_record(*sink, {"category", "metric", "value"});
    write_csv_record(*sink, {label, "gini", format_real(g, kReportDigits)});
  } else {
    diagnostics << "usage: unknown metric '" << opt.metric << "'\n";
    return kExitUsage;
  }
  if (!*sink) throw io_error("write failed: metric report");
  return kExitOk;
}

int cmd_agreement(const AgreementOptions& opt, std::ostream& report,
                  std::ostream& diagnostics) {
  const std::vector<PhotoRecord> records = load_manifest_file(opt.manifest_path);
  const RatingMatrix matrix = make_rating_matrix(records);
  double value = 0.0;
  if (opt.metric == "matching") {
    value = matching_percent(matrix);
  } else if (opt.metric == "fleiss") {
    value = fleiss_kappa_binarized(matrix);
  } else if (opt.metric == "cronbach") {
    value = cronbach_alpha(matrix);
  } else {
    diagnostics << "usage: unknown metric '" << opt.metric << "'\n";
    return kExitUsage;
  }
  write_csv_record(report, {"metric", "value"});
  write_csv_record(report, {opt.metric, format_real(value, kReportDigits)});
  return kExitOk;
}

}  // namespace beauty
