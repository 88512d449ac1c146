#pragma once

// Loader for the vendored reference tables under tests/data.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace golden {

using Row = std::vector<std::string>;

inline std::string path(const std::string& name) { return std::string(TSYM_TEST_DATA_DIR) + "/" + name; }

inline std::string read_file(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + file);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Rows after the header, split on commas.
inline std::vector<Row> read_csv(const std::string& name) {
  std::istringstream in(read_file(path(name)));
  std::string line;
  std::vector<Row> rows;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Row row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(cell);
    rows.push_back(std::move(row));
  }
  return rows;
}

/// "z3" -> 1 etc.
inline int symbol_exponent(const std::string& s) {
  if (s == "1") return 0;
  if (s == "z3") return 1;
  if (s == "z3^-1") return 2;
  throw std::runtime_error("bad symbol " + s);
}

}  // namespace golden
