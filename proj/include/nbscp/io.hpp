#pragma once

// Dataset CSV and result-document plumbing. The dataset contract: one
// header row, a `class` column with 0/1 labels, every other column a
// binary feature; comma separated, no quoting.

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "nbscp/errors.hpp"
#include "nbscp/format.hpp"
#include "nbscp/model.hpp"

namespace nbscp {

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  for (char ch : line) {
    if (ch == ',') {
      cells.push_back(cell);
      cell.clear();
    } else {
      cell.push_back(ch);
    }
  }
  cells.push_back(cell);
  return cells;
}

inline std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace detail

inline Dataset parse_dataset_csv(std::istream& is, const std::string& source) {
  std::string line;
  if (!std::getline(is, line))
    throw validation_error(source + ": empty file");
  const auto header = detail::split_csv_line(detail::strip_cr(line));

  Dataset data;
  std::size_t class_col = header.size();
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == "class") {
      if (class_col != header.size())
        throw validation_error(source + ": multiple 'class' columns");
      class_col = c;
    } else {
      data.feature_names.push_back(header[c]);
    }
  }
  if (class_col == header.size())
    throw validation_error(source + ": missing 'class' column");
  if (data.feature_names.empty())
    throw validation_error(source + ": no feature columns");

  std::size_t row = 1;
  while (std::getline(is, line)) {
    ++row;
    line = detail::strip_cr(line);
    if (line.empty()) continue;
    const auto cells = detail::split_csv_line(line);
    if (cells.size() != header.size())
      throw validation_error(source + ": row " + std::to_string(row) + " has " +
                             std::to_string(cells.size()) + " cells, expected " +
                             std::to_string(header.size()));
    TestPoint p;
    p.bits.reserve(data.feature_names.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c] != "0" && cells[c] != "1")
        throw validation_error(source + ": row " + std::to_string(row) + ", column '" +
                               header[c] + "': non-binary value '" + cells[c] + "'");
      if (c == class_col)
        data.labels.push_back(cells[c] == "1");
      else
        p.bits.push_back(cells[c] == "1");
    }
    data.points.push_back(std::move(p));
  }
  return data;
}

inline Dataset load_dataset(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw validation_error(path + ": cannot open file");
  return parse_dataset_csv(is, path);
}

inline std::string dataset_to_csv(const Dataset& data) {
  const std::size_t n = data.feature_count();
  std::ostringstream os;
  for (std::size_t i = 0; i < n; ++i) {
    if (data.feature_names.size() == n)
      os << data.feature_names[i];
    else
      os << "f" << i + 1;
    os << ",";
  }
  os << "class\n";
  for (std::size_t r = 0; r < data.points.size(); ++r) {
    for (std::size_t i = 0; i < n; ++i) os << int(data.points[r].bits[i]) << ",";
    os << int(data.labels[r]) << "\n";
  }
  return os.str();
}

// Simple rectangular table with pre-formatted cells; the CSV layer for
// experiment results.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t c = 0; c < header.size(); ++c)
      os << header[c] << (c + 1 == header.size() ? "\n" : ",");
    for (const auto& row : rows)
      for (std::size_t c = 0; c < row.size(); ++c)
        os << row[c] << (c + 1 == row.size() ? "\n" : ",");
    return os.str();
  }

  static CsvTable parse(const std::string& text) {
    CsvTable t;
    std::istringstream is(text);
    std::string line;
    if (std::getline(is, line)) t.header = detail::split_csv_line(detail::strip_cr(line));
    while (std::getline(is, line)) {
      line = detail::strip_cr(line);
      if (!line.empty()) t.rows.push_back(detail::split_csv_line(line));
    }
    return t;
  }

  // Structured-text rendering: one `key value` line per cell, blank line
  // between records.
  std::string to_structured_text() const {
    std::ostringstream os;
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size() && c < header.size(); ++c)
        os << header[c] << " " << row[c] << "\n";
      os << "\n";
    }
    return os.str();
  }
};

inline std::string read_text_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw validation_error(path + ": cannot open file");
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw validation_error(path + ": cannot open file for writing");
  os << content;
  if (!os) throw validation_error(path + ": write failed");
}

}  // namespace nbscp
