/*
 * Minimal RFC-4180 CSV reading and writing.
 *
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "beauty/csv.hpp"

#include <istream>
#include <ostream>

#include "beauty/errors.hpp"

namespace beauty {

std::vector<CsvRecord> read_csv(std::istream& in) {
  std::vector<CsvRecord> records;
  CsvRecord record;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  bool record_has_content = false;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(record));
    record.clear();
    record_has_content = false;
  };

  char c;
  while (in.get(c)) {
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || field_was_quoted) {
          throw parse_error("csv: quote inside unquoted field at record " +
                            std::to_string(records.size() + 1));
        }
        in_quotes = true;
        field_was_quoted = true;
        record_has_content = true;
        break;
      case ',':
        end_field();
        record_has_content = true;
        break;
      case '\r':
        if (in.peek() == '\n') in.get(c);
        end_record();
        break;
      case '\n':
        end_record();
        break;
      default:
        field += c;
        record_has_content = true;
        break;
    }
  }
  if (in_quotes) throw parse_error("csv: unterminated quoted field");
  if (record_has_content || !record.empty()) end_record();
  return records;
}

void write_csv_record(std::ostream& out, const CsvRecord& record) {
  for (size_t i = 0; i < record.size(); ++i) {
    if (i > 0) out << ',';
    const std::string& f = record[i];
    const bool needs_quotes =
        f.find_first_of(",\"\r\n") != std::string::npos;
    if (needs_quotes) {
      out << '"';
      for (char c : f) {
        if (c == '"') out << '"';
        out << c;
      }
      out << '"';
    } else {
      out << f;
    }
  }
  out << '\n';
}

}  // namespace beauty
