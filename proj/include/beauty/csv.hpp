/*
 * Minimal RFC-4180 CSV reading and writing.
 *
 * Copyright 2026 The beautyrank Authors.
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef BEAUTY_CSV_HPP
#define BEAUTY_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace beauty {

using CsvRecord = std::vector<std::string>;

// Parses a whole stream. Quoted fields may contain commas, escaped quotes
// ("") and line breaks; CRLF and LF line endings are accepted. A trailing
// newline does not produce an empty record. Throws parse_error on stray
// quotes or an unterminated quoted field.
std::vector<CsvRecord> read_csv(std::istream& in);

// Writes one record, quoting fields only when they need it.
void write_csv_record(std::ostream& out, const CsvRecord& record);

}  // namespace beauty

#endif  // BEAUTY_CSV_HPP
