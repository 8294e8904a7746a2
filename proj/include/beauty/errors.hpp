/*
 * Error types shared across the library.
 *
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef BEAUTY_ERRORS_HPP
#define BEAUTY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace beauty {

// Base class for all library errors so callers can catch one type.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Corrupt or unsupported image stream.
class decode_error : public error {
 public:
  explicit decode_error(const std::string& msg) : error(msg) {}
};

// Image smaller than the 3x3 minimum working size.
class too_small_error : public error {
 public:
  explicit too_small_error(const std::string& msg) : error(msg) {}
};

// Structurally malformed input file (CSV, model document).
class parse_error : public error {
 public:
  explicit parse_error(const std::string& msg) : error(msg) {}
};

// Well-formed input carrying values that violate a field invariant.
class validation_error : public error {
 public:
  explicit validation_error(const std::string& msg) : error(msg) {}
};

// Not enough samples for the requested statistic or fit.
class insufficient_data_error : public error {
 public:
  explicit insufficient_data_error(const std::string& msg) : error(msg) {}
};

// Input on which the requested quantity is mathematically undefined.
class degenerate_input_error : public error {
 public:
  explicit degenerate_input_error(const std::string& msg) : error(msg) {}
};

// Model built against a different feature layout than this binary's.
class layout_mismatch_error : public error {
 public:
  explicit layout_mismatch_error(const std::string& msg) : error(msg) {}
};

// Ranked photo id with no ground-truth score.
class missing_truth_error : public error {
 public:
  explicit missing_truth_error(const std::string& msg) : error(msg) {}
};

// Score row whose photo id is absent from the manifest.
class missing_join_error : public error {
 public:
  explicit missing_join_error(const std::string& msg) : error(msg) {}
};

// File could not be opened, read, or written.
class io_error : public error {
 public:
  explicit io_error(const std::string& msg) : error(msg) {}
};

}  // namespace beauty

#endif  // BEAUTY_ERRORS_HPP
