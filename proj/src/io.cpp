#include "robustmedian/io.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace robmed {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<double> parse_data_text(const std::string& text,
                                    const std::string& origin) {
  std::vector<double> values;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string cell = line;
    const auto comma = cell.find(',');
    if (comma != std::string::npos) cell = cell.substr(0, comma);
    cell = trim(cell);
    if (cell.empty() || cell[0] == '#') continue;

    const char* begin = cell.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
      throw DataError(origin + ": line " + std::to_string(lineno) +
                      ": not a number: \"" + cell + "\"");
    if (!std::isfinite(v))
      throw DataError(origin + ": line " + std::to_string(lineno) +
                      ": non-finite value: \"" + cell + "\"");
    values.push_back(v);
  }
  if (values.size() < 2)
    throw DataError(origin + ": need at least 2 finite numbers, found " +
                    std::to_string(values.size()));
  return values;
}

std::vector<double> read_data_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_data_text(buf.str(), path);
}

}  // namespace robmed
