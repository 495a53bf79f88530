#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "entropy_extremes/bounds.hpp"
#include "entropy_extremes/errors.hpp"
#include "entropy_extremes/prob_vec.hpp"

#include "json.hpp"

namespace entropy_extremes::io {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed to read: " + path);
  return buf.str();
}

namespace detail {

inline std::string trimmed(const std::string& text) {
  std::size_t first = 0;
  std::size_t last = text.size();
  while (first < last && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  while (last > first && std::isspace(static_cast<unsigned char>(text[last - 1]))) --last;
  return text.substr(first, last - first);
}

// Numbers separated by commas and/or whitespace (a CSV row, possibly spread
// over several lines).
inline std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> values;
  const char* cursor = text.c_str();
  const char* end = cursor + text.size();
  while (cursor < end) {
    while (cursor < end &&
           (*cursor == ',' || std::isspace(static_cast<unsigned char>(*cursor)))) {
      ++cursor;
    }
    if (cursor >= end) break;
    char* after = nullptr;
    const double value = std::strtod(cursor, &after);
    if (after == cursor) {
      throw IoError("expected a number, found: " + std::string(cursor, std::min<std::size_t>(
                                                                           12, end - cursor)));
    }
    values.push_back(value);
    cursor = after;
  }
  return values;
}

inline std::vector<double> parse_json_numbers(const nlohmann::json& node) {
  if (!node.is_array()) throw IoError("expected a JSON array of numbers");
  std::vector<double> values;
  values.reserve(node.size());
  for (const auto& item : node) {
    if (!item.is_number()) throw IoError("expected a JSON array of numbers");
    values.push_back(item.get<double>());
  }
  return values;
}

}  // namespace detail

// A distribution given inline ('[0.5,0.5]' or '0.5,0.5') or as a path to a
// file holding a JSON array or a CSV row.
inline ProbVec parse_prob_vec_arg(const std::string& arg) {
  std::string text = detail::trimmed(arg);
  if (text.empty()) throw IoError("empty distribution argument");
  const char head = text.front();
  const bool inline_numbers = std::isdigit(static_cast<unsigned char>(head)) || head == '.' ||
                              head == '+' || head == '-';
  if (head != '[' && !inline_numbers) {
    text = detail::trimmed(read_file(text));
    if (text.empty()) throw IoError("empty distribution file: " + arg);
  }
  if (text.front() == '[') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw IoError(std::string("bad JSON distribution: ") + e.what());
    }
    return ProbVec(detail::parse_json_numbers(doc));
  }
  return ProbVec(detail::parse_numbers(text));
}

// A channel matrix from a file: JSON {"matrix": [[...],...]} (or a bare JSON
// 2D array), otherwise CSV with one row per input symbol.
inline std::vector<std::vector<double>> parse_matrix_file(const std::string& path) {
  const std::string text = detail::trimmed(read_file(path));
  if (text.empty()) throw IoError("empty matrix file: " + path);
  std::vector<std::vector<double>> rows;
  if (text.front() == '{' || text.front() == '[') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw IoError(std::string("bad JSON matrix: ") + e.what());
    }
    const nlohmann::json* grid = &doc;
    if (doc.is_object()) {
      if (!doc.contains("matrix")) throw IoError("JSON matrix object needs a \"matrix\" field");
      grid = &doc.at("matrix");
    }
    if (!grid->is_array()) throw IoError("matrix must be an array of rows");
    for (const auto& row : *grid) rows.push_back(detail::parse_json_numbers(row));
    return rows;
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    line = detail::trimmed(line);
    if (line.empty()) continue;
    rows.push_back(detail::parse_numbers(line));
  }
  return rows;
}

// Measures whose values are logarithmic (nats); only these rescale under the
// bits display option.
inline bool measured_in_nats(const std::string& measure) {
  return measure == "renyi" || measure == "shannon-entropy" || measure == "renyi-divergence" ||
         measure == "gallager-e0";
}

inline nlohmann::ordered_json to_json(const BoundReport& report, bool bits = false) {
  const double scale = bits && measured_in_nats(report.measure) ? 1.0 / std::log(2.0) : 1.0;
  nlohmann::ordered_json doc;
  doc["measure"] = report.measure;
  doc["value"] = report.value * scale;
  doc["lower"] = report.lower * scale;
  doc["upper"] = report.upper * scale;
  doc["attaining_lower"] = report.attaining_lower.entries();
  doc["attaining_upper"] = report.attaining_upper.entries();
  return doc;
}

}  // namespace entropy_extremes::io
