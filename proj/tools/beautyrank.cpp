/*
 * beautyrank command-line front end.
 *
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include <exception>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "beauty/commands.hpp"
#include "beauty/corpus.hpp"
#include "beauty/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "beautyrank: extract compositional features from photos, fit aesthetic "
      "models on crowd scores, and surface beautiful low-popularity images"};
  app.require_subcommand(1);

  const std::vector<std::string> categories(std::begin(beauty::kCategories),
                                            std::end(beauty::kCategories));

  beauty::ExtractOptions extract_opt;
  CLI::App* extract = app.add_subcommand(
      "extract", "Extract feature vectors for every manifest image");
  extract->add_option("--manifest", extract_opt.manifest_path, "Manifest CSV")
      ->required();
  extract->add_option("--out", extract_opt.out_path, "Output feature CSV")
      ->required();
  extract->add_option("--jobs", extract_opt.jobs, "Worker threads")
      ->capture_default_str()
      ->check(CLI::Range(1, 512));

  beauty::TrainOptions train_opt;
  CLI::App* train = app.add_subcommand(
      "train", "Fit an aesthetic model for one category");
  train->add_option("--features", train_opt.features_path, "Feature CSV")
      ->required();
  train->add_option("--manifest", train_opt.manifest_path, "Manifest CSV")
      ->required();
  train->add_option("--category", train_opt.category, "Category to train")
      ->required()
      ->check(CLI::IsMember(categories));
  train->add_option("--components", train_opt.components, "Latent components")
      ->capture_default_str()
      ->check(CLI::Range(1, 47));
  train->add_option("--seed", train_opt.seed, "Split shuffle seed")
      ->capture_default_str();
  train->add_option("--test-size", train_opt.test_size,
                    "Held-out tail photos per category")
      ->capture_default_str();
  train->add_option("--out", train_opt.out_path, "Output model file")
      ->required();
  train->add_option("--split-out", train_opt.split_out_path,
                    "Test photo_id list (default: <out>.split)");

  beauty::ScoreOptions score_opt;
  CLI::App* score = app.add_subcommand(
      "score", "Predict aesthetic scores for a feature table");
  score->add_option("--model", score_opt.model_path, "Model file")->required();
  score->add_option("--features", score_opt.features_path, "Feature CSV")
      ->required();
  score->add_option("--out", score_opt.out_path, "Output scores CSV")
      ->required();

  beauty::SurfaceOptions surface_opt;
  CLI::App* surface = app.add_subcommand(
      "surface", "Rank one popularity bucket by predicted score");
  surface->add_option("--scores", surface_opt.scores_path, "Scores CSV")
      ->required();
  surface->add_option("--manifest", surface_opt.manifest_path, "Manifest CSV")
      ->required();
  surface->add_option("--bucket", surface_opt.bucket, "Popularity bucket")
      ->capture_default_str()
      ->check(CLI::IsMember({"tail", "torso", "head"}));
  surface->add_option("--top", surface_opt.top, "Rows to emit")
      ->required()
      ->check(CLI::PositiveNumber);
  surface->add_option("--out", surface_opt.out_path, "Output ranking CSV")
      ->required();

  beauty::EvalOptions eval_opt;
  CLI::App* eval = app.add_subcommand(
      "eval", "Report a prediction or popularity metric");
  eval->add_option("--scores", eval_opt.scores_path,
                   "Scores CSV (unused by gini)");
  eval->add_option("--manifest", eval_opt.manifest_path, "Manifest CSV")
      ->required();
  eval->add_option("--metric", eval_opt.metric, "Metric to compute")
      ->required()
      ->check(CLI::IsMember({"spearman", "beauty-at-n", "gini"}));
  eval->add_option("--category", eval_opt.category,
                   "Restrict to one category (default: all)")
      ->check(CLI::IsMember(categories));
  eval->add_option("--out", eval_opt.out_path,
                   "Report CSV (default: stdout)");

  beauty::AgreementOptions agreement_opt;
  CLI::App* agreement = app.add_subcommand(
      "agreement", "Inter-rater agreement over manifest judgments");
  agreement->add_option("--manifest", agreement_opt.manifest_path,
                        "Manifest CSV")
      ->required();
  agreement->add_option("--metric", agreement_opt.metric, "Statistic")
      ->required()
      ->check(CLI::IsMember({"matching", "fleiss", "cronbach"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? beauty::kExitOk : beauty::kExitUsage;
  }

  try {
    if (*extract) return beauty::cmd_extract(extract_opt, std::cerr);
    if (*train) return beauty::cmd_train(train_opt, std::cerr);
    if (*score) return beauty::cmd_score(score_opt, std::cerr);
    if (*surface) return beauty::cmd_surface(surface_opt, std::cerr);
    if (*eval) return beauty::cmd_eval(eval_opt, std::cout, std::cerr);
    if (*agreement) {
      return beauty::cmd_agreement(agreement_opt, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return beauty::kExitData;
  }
  return beauty::kExitUsage;
}
