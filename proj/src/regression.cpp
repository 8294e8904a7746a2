/*
 * Standardization, NIPALS PLS1, and the model document format.
 *
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "beauty/regression.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "beauty/errors.hpp"
#include "beauty/num.hpp"

namespace beauty {

namespace {

constexpr double kResidualFloor = 1e-10;  // Frobenius norm early stop
constexpr double kDirectionFloor = 1e-12; // no covariance direction left

double frobenius_norm(const std::vector<double>& m) {
  double acc = 0.0;
  for (double v : m) acc += v * v;
  return std::sqrt(acc);
}

}  // namespace

StandardizationStats fit_standardization(const std::vector<FeatureVector>& X) {
  if (X.size() < 2) {
    throw insufficient_data_error("standardization needs at least 2 samples, got " +
                                  std::to_string(X.size()));
  }
  StandardizationStats stats;
  const double n = static_cast<double>(X.size());
  for (int j = 0; j < kFeatureDim; ++j) {
    double mean = 0.0;
    for (const FeatureVector& x : X) mean += x[j];
    mean /= n;
    double var = 0.0;
    for (const FeatureVector& x : X) var += (x[j] - mean) * (x[j] - mean);
    var /= n;
    const double sd = std::sqrt(var);
    stats.means[j] = mean;
    stats.scales[j] = sd > 0.0 ? sd : 1.0;
  }
  return stats;
}

AestheticModel plsr_fit(const std::vector<FeatureVector>& X,
                        const std::vector<double>& y, int components,
                        const std::string& category) {
  if (X.size() != y.size()) {
    throw std::invalid_argument("plsr_fit: |X| = " + std::to_string(X.size()) +
                                " but |y| = " + std::to_string(y.size()));
  }
  if (components < 1 || components > kFeatureDim) {
    throw std::invalid_argument("plsr_fit: components must be in [1, " +
                                std::to_string(kFeatureDim) + "]");
  }
  if (X.size() < static_cast<size_t>(components) + 1) {
    throw insufficient_data_error("plsr_fit: need at least " +
                                  std::to_string(components + 1) +
                                  " samples for " + std::to_string(components) +
                                  " components, got " + std::to_string(X.size()));
  }

  const size_t n = X.size();
  const int p = kFeatureDim;

  AestheticModel model;
  model.layout_version = kFeatureLayoutVersion;
  model.category = category;
  model.stats = fit_standardization(X);

  double y_mean = 0.0;
  for (double v : y) y_mean += v;
  y_mean /= static_cast<double>(n);
  model.intercept = y_mean;
  model.coefficients.fill(0.0);

  // Constant target: nothing to regress on.
  bool y_constant = true;
  for (double v : y) {
    if (v != y[0]) {
      y_constant = false;
      break;
    }
  }
  if (y_constant) {
    model.components = 1;
    return model;
  }

  // Standardized predictors and centered response, deflated in place.
  std::vector<double> Z(n * p);
  for (size_t i = 0; i < n; ++i) {
    for (int j = 0; j < p; ++j) {
      Z[i * p + j] = (X[i][j] - model.stats.means[j]) / model.stats.scales[j];
    }
  }
  std::vector<double> f(n);
  for (size_t i = 0; i < n; ++i) f[i] = y[i] - y_mean;

  std::vector<std::vector<double>> weights, loadings;  // w_a, p_a per step
  std::vector<double> y_loadings;                      // q_a per step
  std::vector<double> w(p), t(n), pl(p);

  int extracted = 0;
  for (int a = 0; a < components; ++a) {
    // Weight direction from the residual covariance X^T f.
    for (int j = 0; j < p; ++j) {
      double acc = 0.0;
      for (size_t i = 0; i < n; ++i) acc += Z[i * p + j] * f[i];
      w[j] = acc;
    }
    double w_norm = 0.0;
    for (double v : w) w_norm += v * v;
    w_norm = std::sqrt(w_norm);
    if (w_norm < kDirectionFloor) break;
    for (double& v : w) v /= w_norm;

    // Scores and loadings.
    double tt = 0.0;
    for (size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int j = 0; j < p; ++j) acc += Z[i * p + j] * w[j];
      t[i] = acc;
      tt += acc * acc;
    }
    if (tt < kDirectionFloor) break;
    for (int j = 0; j < p; ++j) {
      double acc = 0.0;
      for (size_t i = 0; i < n; ++i) acc += Z[i * p + j] * t[i];
      pl[j] = acc / tt;
    }
    double q = 0.0;
    for (size_t i = 0; i < n; ++i) q += f[i] * t[i];
    q /= tt;

    // Deflate.
    for (size_t i = 0; i < n; ++i) {
      for (int j = 0; j < p; ++j) Z[i * p + j] -= t[i] * pl[j];
      f[i] -= q * t[i];
    }

    weights.push_back(w);
    loadings.push_back(pl);
    y_loadings.push_back(q);
    ++extracted;

    if (frobenius_norm(Z) < kResidualFloor) break;
  }
  model.components = extracted > 0 ? extracted : 1;

  // Fold the components into one coefficient vector: the transformed
  // weights r_a = w_a - sum_{b<a} (p_b . w_a) r_b satisfy
  // B = sum_a q_a r_a because P^T W is unit upper triangular.
  std::vector<std::vector<double>> r;
  for (int a = 0; a < extracted; ++a) {
    std::vector<double> ra = weights[a];
    for (int b = 0; b < a; ++b) {
      double proj = 0.0;
      for (int j = 0; j < p; ++j) proj += loadings[b][j] * weights[a][j];
      for (int j = 0; j < p; ++j) ra[j] -= proj * r[b][j];
    }
    r.push_back(std::move(ra));
    for (int j = 0; j < p; ++j) model.coefficients[j] += y_loadings[a] * r[a][j];
  }
  return model;
}

double plsr_predict(const AestheticModel& model, const FeatureVector& x) {
  if (model.layout_version != kFeatureLayoutVersion) {
    throw layout_mismatch_error("model layout '" + model.layout_version +
                                "' does not match extractor layout '" +
                                kFeatureLayoutVersion + "'");
  }
  double score = model.intercept;
  for (int j = 0; j < kFeatureDim; ++j) {
    score += (x[j] - model.stats.means[j]) / model.stats.scales[j] *
             model.coefficients[j];
  }
  return score;
}

namespace {

void write_real_row(std::ostream& out, const char* key,
                    std::span<const double> values) {
  out << key;
  for (double v : values) out << ' ' << format_real(v, 17);
  out << '\n';
}

std::vector<std::string> tokenize_line(const std::string& line) {
  std::vector<std::string> tokens;
  std::stringstream ss(line);
  std::string token;
  while (ss >> token) tokens.push_back(token);
  return tokens;
}

std::array<double, kFeatureDim> parse_real_row(const std::vector<std::string>& tokens,
                                               const std::string& key) {
  if (tokens.size() != static_cast<size_t>(kFeatureDim) + 1) {
    throw parse_error("model: '" + key + "' must carry " +
                      std::to_string(kFeatureDim) + " values, got " +
                      std::to_string(tokens.size() - 1));
  }
  std::array<double, kFeatureDim> values{};
  for (int j = 0; j < kFeatureDim; ++j) {
    const auto v = parse_real(tokens[j + 1]);
    if (!v) throw parse_error("model: bad real '" + tokens[j + 1] + "' in " + key);
    values[j] = *v;
  }
  return values;
}

}  // namespace

std::string save_model(const AestheticModel& model) {
  std::ostringstream out;
  out << "layout_version " << model.layout_version << '\n';
  out << "category " << model.category << '\n';
  out << "components " << model.components << '\n';
  write_real_row(out, "means", model.stats.means);
  write_real_row(out, "scales", model.stats.scales);
  write_real_row(out, "coefficients", model.coefficients);
  out << "intercept " << format_real(model.intercept, 17) << '\n';
  return out.str();
}

AestheticModel load_model(const std::string& bytes) {
  std::istringstream in(bytes);
  std::string line;
  std::vector<std::vector<std::string>> lines;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(tokenize_line(line));
  }
  if (lines.empty() || lines[0].size() != 2 || lines[0][0] != "layout_version") {
    throw parse_error("model: missing layout_version");
  }
  if (lines[0][1] != kFeatureLayoutVersion) {
    throw layout_mismatch_error("model layout '" + lines[0][1] +
                                "' does not match extractor layout '" +
                                kFeatureLayoutVersion + "'");
  }

  AestheticModel model;
  model.layout_version = lines[0][1];
  if (lines.size() != 7) {
    throw parse_error("model: expected 7 lines, got " + std::to_string(lines.size()));
  }
  if (lines[1].size() != 2 || lines[1][0] != "category") {
    throw parse_error("model: missing category");
  }
  model.category = lines[1][1];
  if (lines[2].size() != 2 || lines[2][0] != "components") {
    throw parse_error("model: missing components");
  }
  const auto components = parse_integer(lines[2][1]);
  if (!components || *components < 1 || *components > kFeatureDim) {
    throw parse_error("model: bad components '" + lines[2][1] + "'");
  }
  model.components = static_cast<int>(*components);
  if (lines[3].empty() || lines[3][0] != "means") throw parse_error("model: missing means");
  model.stats.means = parse_real_row(lines[3], "means");
  if (lines[4].empty() || lines[4][0] != "scales") throw parse_error("model: missing scales");
  model.stats.scales = parse_real_row(lines[4], "scales");
  for (double s : model.stats.scales) {
    if (!(s > 0.0)) throw parse_error("model: scales must be strictly positive");
  }
  if (lines[5].empty() || lines[5][0] != "coefficients") {
    throw parse_error("model: missing coefficients");
  }
  model.coefficients = parse_real_row(lines[5], "coefficients");
  if (lines[6].size() != 2 || lines[6][0] != "intercept") {
    throw parse_error("model: missing intercept");
  }
  const auto intercept = parse_real(lines[6][1]);
  if (!intercept) throw parse_error("model: bad intercept '" + lines[6][1] + "'");
  model.intercept = *intercept;
  return model;
}

void save_model_file(const std::string& path, const AestheticModel& model) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open " + path + " for writing");
  out << save_model(model);
  if (!out) throw io_error("write failed: " + path);
}

AestheticModel load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_model(buf.str());
}

}  // namespace beauty
