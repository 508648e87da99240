// Data ingestion for the command line: UTF-8 text, one number per line or
// the first CSV column, '#' comment lines ignored.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace robmed {

// Unreadable or malformed input data; maps to CLI exit code 3.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses the file; throws DataError naming the offending line on
// non-numeric or non-finite content, an unreadable file, or fewer than two
// values.
std::vector<double> read_data_file(const std::string& path);

// Same grammar, from an already-loaded string (used by tests).
std::vector<double> parse_data_text(const std::string& text,
                                    const std::string& origin = "<input>");

}  // namespace robmed
