/*
 * Photo manifests, popularity buckets, and train/test splitting.
 *
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef BEAUTY_CORPUS_HPP
#define BEAUTY_CORPUS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace beauty {

// Partition of the favorites axis: tail f <= 5, torso 5 < f <= 45,
// head f > 45.
enum class PopularityBucket { tail, torso, head };

PopularityBucket popularity_bucket(long long favorites);

const char* to_string(PopularityBucket bucket);
std::optional<PopularityBucket> bucket_from_string(const std::string& name);

inline constexpr const char* kCategories[] = {"people", "nature", "animals",
                                              "urban"};
bool is_known_category(const std::string& category);

// One manifest row. mean_score, when judgments are present, is their
// arithmetic mean; otherwise it is the score column as given.
struct PhotoRecord {
  std::string photo_id;
  std::string path;
  std::string category;
  long long favorites = 0;
  std::vector<int> judgments;        // each in [1,5]; empty when unlabeled
  std::optional<double> mean_score;  // in [1,5]
};

// Manifest CSV: header photo_id,path,category,favorites,score,judgments;
// judgments pipe-separated; score and judgments may be empty. Rows that
// violate a field invariant raise validation_error naming the data row.
std::vector<PhotoRecord> load_manifest(std::istream& in);
std::vector<PhotoRecord> load_manifest_file(const std::string& path);

void save_manifest(std::ostream& out, const std::vector<PhotoRecord>& records);
void save_manifest_file(const std::string& path,
                        const std::vector<PhotoRecord>& records);

struct TrainTestSplit {
  std::vector<PhotoRecord> train;
  std::vector<PhotoRecord> test;
};

// Filters records to one category, draws test_size test photos from the
// tail bucket with a seeded shuffle, and trains on everything else (all
// buckets). Reproducible for a fixed seed; throws insufficient_data_error
// when the tail cannot cover test_size.
TrainTestSplit split_train_test(const std::vector<PhotoRecord>& records,
                                const std::string& category, size_t test_size,
                                uint64_t seed);

}  // namespace beauty

#endif  // BEAUTY_CORPUS_HPP
