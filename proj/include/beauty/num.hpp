/*
 * Locale-independent number formatting and parsing.
 *
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef BEAUTY_NUM_HPP
#define BEAUTY_NUM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace beauty {

// %g-style rendering with the given number of significant digits.
std::string format_real(double value, int significant_digits);

std::optional<double> parse_real(std::string_view text);
std::optional<long long> parse_integer(std::string_view text);

}  // namespace beauty

#endif  // BEAUTY_NUM_HPP
