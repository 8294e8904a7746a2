/*
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include <cmath>
#include <random>
#include <sstream>

#include "beauty/csv.hpp"
#include "beauty/errors.hpp"
#include "beauty/num.hpp"
#include "doctest.h"

namespace {

std::vector<beauty::CsvRecord> parse(const std::string& text) {
  std::istringstream in(text);
  return beauty::read_csv(in);
}

std::string render(const std::vector<beauty::CsvRecord>& records) {
  std::ostringstream out;
  for (const auto& rec : records) beauty::write_csv_record(out, rec);
  return out.str();
}

}  // namespace

TEST_SUITE("num") {
  TEST_CASE("format_real trims like %g") {
    CHECK(beauty::format_real(0.25, 9) == "0.25");
    CHECK(beauty::format_real(1.0, 9) == "1");
    CHECK(beauty::format_real(-3.5, 17) == "-3.5");
    CHECK(beauty::format_real(0.0, 9) == "0");
  }

  TEST_CASE("17 significant digits round-trip doubles exactly") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
      const double exponent = static_cast<double>(rng() % 601) - 300.0;
      double value = std::ldexp(static_cast<double>(rng()) / 1.8446744073709552e19,
                                static_cast<int>(exponent / 20.0));
      if (rng() % 2 == 0) value = -value;
      const auto back = beauty::parse_real(beauty::format_real(value, 17));
      REQUIRE(back.has_value());
      CHECK(*back == value);
    }
  }

  TEST_CASE("parse_real accepts plain reals only") {
    CHECK(beauty::parse_real("1e3") == 1000.0);
    CHECK(beauty::parse_real("-0.5") == -0.5);
    CHECK_FALSE(beauty::parse_real("abc").has_value());
    CHECK_FALSE(beauty::parse_real("1.5x").has_value());
    CHECK_FALSE(beauty::parse_real("").has_value());
    CHECK_FALSE(beauty::parse_real(" 1").has_value());
  }

  TEST_CASE("parse_integer requires a full integral token") {
    CHECK(beauty::parse_integer("42") == 42);
    CHECK(beauty::parse_integer("-7") == -7);
    CHECK_FALSE(beauty::parse_integer("4.2").has_value());
    CHECK_FALSE(beauty::parse_integer("").has_value());
    CHECK_FALSE(beauty::parse_integer("99999999999999999999").has_value());
  }
}

TEST_SUITE("csv") {
  TEST_CASE("plain rows split on commas and newlines") {
    const auto rows = parse("a,b,c\n1,2,3\n");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == beauty::CsvRecord{"a", "b", "c"});
    CHECK(rows[1] == beauty::CsvRecord{"1", "2", "3"});
  }

  TEST_CASE("missing trailing newline still yields the last record") {
    const auto rows = parse("x,y\n1,2");
    REQUIRE(rows.size() == 2);
    CHECK(rows[1] == beauty::CsvRecord{"1", "2"});
  }

  TEST_CASE("quoted fields carry commas, quotes, and newlines") {
    const auto rows = parse("a,\"b,c\",\"he said \"\"hi\"\"\",\"two\nlines\"\n");
    REQUIRE(rows.size() == 1);
    REQUIRE(rows[0].size() == 4);
    CHECK(rows[0][1] == "b,c");
    CHECK(rows[0][2] == "he said \"hi\"");
    CHECK(rows[0][3] == "two\nlines");
  }

  TEST_CASE("CRLF rows parse like LF rows") {
    const auto rows = parse("a,b\r\nc,d\r\n");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == beauty::CsvRecord{"a", "b"});
    CHECK(rows[1] == beauty::CsvRecord{"c", "d"});
  }

  TEST_CASE("empty fields survive") {
    const auto rows = parse(",x,\n");
    REQUIRE(rows.size() == 1);
    CHECK(rows[0] == beauty::CsvRecord{"", "x", ""});
  }

  TEST_CASE("stray or unterminated quotes are rejected") {
    CHECK_THROWS_AS(parse("a,b\"c\n"), beauty::parse_error);
    CHECK_THROWS_AS(parse("\"open,field\n"), beauty::parse_error);
  }

  TEST_CASE("writer quotes exactly the fields that need it") {
    std::ostringstream out;
    beauty::write_csv_record(out, {"plain", "with,comma", "with\"quote", "nl\n"});
    CHECK(out.str() == "plain,\"with,comma\",\"with\"\"quote\",\"nl\n\"\n");
  }

  TEST_CASE("write then read is identity for tricky records") {
    const std::vector<beauty::CsvRecord> records = {
        {"a", "", "c"},
        {"x,y", "\"", "line\nbreak"},
        {"", "", ""},
    };
    CHECK(parse(render(records)) == records);
  }
}
