/*
 * Manifest loading, validation, and train/test splitting.
 *
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "beauty/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "beauty/csv.hpp"
#include "beauty/errors.hpp"
#include "beauty/num.hpp"

namespace beauty {

namespace {

constexpr char kManifestHeader[] = "photo_id,path,category,favorites,score,judgments";
constexpr double kScoreTolerance = 1e-9;

std::vector<int> parse_judgments(const std::string& field, size_t row) {
  std::vector<int> judgments;
  if (field.empty()) return judgments;
  std::stringstream ss(field);
  std::string token;
  while (std::getline(ss, token, '|')) {
    const auto value = parse_integer(token);
    if (!value) {
      throw validation_error("manifest row " + std::to_string(row) +
                             ": judgment '" + token + "' is not an integer");
    }
    if (*value < 1 || *value > 5) {
      throw validation_error("manifest row " + std::to_string(row) +
                             ": judgment " + token + " outside [1,5]");
    }
    judgments.push_back(static_cast<int>(*value));
  }
  if (judgments.empty()) {
    throw validation_error("manifest row " + std::to_string(row) +
                           ": malformed judgments field '" + field + "'");
  }
  return judgments;
}

PhotoRecord parse_record(const CsvRecord& fields, size_t row) {
  if (fields.size() != 6) {
    throw parse_error("manifest row " + std::to_string(row) + ": expected 6 fields, got " +
                      std::to_string(fields.size()));
  }
  PhotoRecord rec;
  rec.photo_id = fields[0];
  rec.path = fields[1];
  rec.category = fields[2];
  if (rec.photo_id.empty()) {
    throw validation_error("manifest row " + std::to_string(row) + ": empty photo_id");
  }
  if (!is_known_category(rec.category)) {
    throw validation_error("manifest row " + std::to_string(row) +
                           ": unknown category '" + rec.category + "'");
  }
  const auto favorites = parse_integer(fields[3]);
  if (!favorites) {
    throw validation_error("manifest row " + std::to_string(row) +
                           ": favorites '" + fields[3] + "' is not an integer");
  }
  if (*favorites < 0) {
    throw validation_error("manifest row " + std::to_string(row) +
                           ": negative favorites " + fields[3]);
  }
  rec.favorites = *favorites;

  std::optional<double> score;
  if (!fields[4].empty()) {
    score = parse_real(fields[4]);
    if (!score) {
      throw validation_error("manifest row " + std::to_string(row) +
                             ": score '" + fields[4] + "' is not a number");
    }
    if (*score < 1.0 || *score > 5.0) {
      throw validation_error("manifest row " + std::to_string(row) +
                             ": score " + fields[4] + " outside [1,5]");
    }
  }
  rec.judgments = parse_judgments(fields[5], row);
  if (!rec.judgments.empty()) {
    double sum = 0.0;
    for (int j : rec.judgments) sum += j;
    const double mean = sum / static_cast<double>(rec.judgments.size());
    if (score && std::abs(*score - mean) > kScoreTolerance) {
      throw validation_error("manifest row " + std::to_string(row) + ": score " +
                             fields[4] + " disagrees with judgment mean " +
                             format_real(mean, 9));
    }
    rec.mean_score = mean;
  } else {
    rec.mean_score = score;
  }
  return rec;
}

}  // namespace

PopularityBucket popularity_bucket(long long favorites) {
  if (favorites <= 5) return PopularityBucket::tail;
  if (favorites <= 45) return PopularityBucket::torso;
  return PopularityBucket::head;
}

const char* to_string(PopularityBucket bucket) {
  switch (bucket) {
    case PopularityBucket::tail: return "tail";
    case PopularityBucket::torso: return "torso";
    case PopularityBucket::head: return "head";
  }
  return "?";
}

std::optional<PopularityBucket> bucket_from_string(const std::string& name) {
  if (name == "tail") return PopularityBucket::tail;
  if (name == "torso") return PopularityBucket::torso;
  if (name == "head") return PopularityBucket::head;
  return std::nullopt;
}

bool is_known_category(const std::string& category) {
  for (const char* c : kCategories) {
    if (category == c) return true;
  }
  return false;
}

std::vector<PhotoRecord> load_manifest(std::istream& in) {
  const std::vector<CsvRecord> rows = read_csv(in);
  if (rows.empty()) throw parse_error("manifest: missing header");

  std::string header;
  for (size_t i = 0; i < rows[0].size(); ++i) {
    if (i > 0) header += ',';
    header += rows[0][i];
  }
  if (header != kManifestHeader) {
    throw parse_error("manifest: bad header '" + header + "', expected '" +
                      kManifestHeader + "'");
  }

  std::vector<PhotoRecord> records;
  records.reserve(rows.size() - 1);
  for (size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() == 1 && rows[i][0].empty()) continue;  // blank line
    records.push_back(parse_record(rows[i], i));
  }
  return records;
}

std::vector<PhotoRecord> load_manifest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  return load_manifest(in);
}

void save_manifest(std::ostream& out, const std::vector<PhotoRecord>& records) {
  write_csv_record(out, {"photo_id", "path", "category", "favorites", "score",
                         "judgments"});
  for (const PhotoRecord& rec : records) {
    std::string judgments;
    for (size_t i = 0; i < rec.judgments.size(); ++i) {
      if (i > 0) judgments += '|';
      judgments += std::to_string(rec.judgments[i]);
    }
    write_csv_record(out, {rec.photo_id, rec.path, rec.category,
                           std::to_string(rec.favorites),
                           rec.mean_score ? format_real(*rec.mean_score, 17) : "",
                           judgments});
  }
}

void save_manifest_file(const std::string& path,
                        const std::vector<PhotoRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open " + path + " for writing");
  save_manifest(out, records);
  if (!out) throw io_error("write failed: " + path);
}

TrainTestSplit split_train_test(const std::vector<PhotoRecord>& records,
                                const std::string& category, size_t test_size,
                                uint64_t seed) {
  std::vector<PhotoRecord> pool;
  for (const PhotoRecord& rec : records) {
    if (rec.category == category) pool.push_back(rec);
  }
  if (test_size >= pool.size()) {
    throw insufficient_data_error(
        "split: test_size " + std::to_string(test_size) + " with only " +
        std::to_string(pool.size()) + " '" + category + "' records");
  }

  std::vector<size_t> tail_indices;
  for (size_t i = 0; i < pool.size(); ++i) {
    if (popularity_bucket(pool[i].favorites) == PopularityBucket::tail) {
      tail_indices.push_back(i);
    }
  }
  if (tail_indices.size() < test_size) {
    throw insufficient_data_error(
        "split: test draws from the tail bucket only, which has " +
        std::to_string(tail_indices.size()) + " records < test_size " +
        std::to_string(test_size));
  }

  // Explicit Fisher-Yates on top of mt19937 so the split depends on the
  // seed alone, not on any library's distribution internals.
  std::mt19937 rng(static_cast<uint32_t>(seed));
  for (size_t i = tail_indices.size() - 1; i > 0; --i) {
    const size_t j = rng() % (i + 1);
    std::swap(tail_indices[i], tail_indices[j]);
  }

  std::vector<bool> in_test(pool.size(), false);
  for (size_t i = 0; i < test_size; ++i) in_test[tail_indices[i]] = true;

  TrainTestSplit split;
  for (size_t i = 0; i < pool.size(); ++i) {
    (in_test[i] ? split.test : split.train).push_back(pool[i]);
  }
  return split;
}

}  // namespace beauty
