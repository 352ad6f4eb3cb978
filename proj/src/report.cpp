#include "boolmax/report.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "boolmax/version.hpp"

namespace boolmax {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// RFC-4180-style quoting: quote when the field contains a comma, a quote or
// a line break, doubling embedded quotes.
std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

nlohmann::json cell_to_json(const Cell& cell) {
  if (std::holds_alternative<double>(cell)) return std::get<double>(cell);
  if (std::holds_alternative<long long>(cell)) return std::get<long long>(cell);
  if (std::holds_alternative<bool>(cell)) return std::get<bool>(cell);
  return std::get<std::string>(cell);
}

}  // namespace

std::string format_cell(const Cell& cell) {
  if (std::holds_alternative<double>(cell)) return format_double(std::get<double>(cell));
  if (std::holds_alternative<long long>(cell)) return std::to_string(std::get<long long>(cell));
  if (std::holds_alternative<bool>(cell)) return std::get<bool>(cell) ? "true" : "false";
  return std::get<std::string>(cell);
}

void Report::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size())
    throw std::invalid_argument("Report: row width does not match column count");
  rows_.push_back(std::move(row));
}

void Report::add_summary(const std::string& key, Cell value) {
  summary_.emplace_back(key, std::move(value));
}

void Report::set_config_echo(const std::string& key, const std::string& value) {
  config_.emplace_back(key, value);
}

std::string Report::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(columns_[i]);
  }
  for (const auto& [key, value] : summary_) {
    out += ',';
    out += csv_escape(key);
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(format_cell(row[i]));
    }
    for (const auto& [key, value] : summary_) {
      out += ',';
      out += csv_escape(format_cell(value));
    }
    out += '\n';
  }
  return out;
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["metadata"]["tool_version"] = kVersion;
  j["metadata"]["command"] = command_;
  nlohmann::json config = nlohmann::json::object();
  for (const auto& [key, value] : config_) config[key] = value;
  j["metadata"]["config"] = config;
  if (!diagnostic_.empty()) j["diagnostic"] = diagnostic_;
  nlohmann::json summary = nlohmann::json::object();
  for (const auto& [key, value] : summary_) summary[key] = cell_to_json(value);
  j["summary"] = summary;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : rows_) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[columns_[i]] = cell_to_json(row[i]);
    rows.push_back(obj);
  }
  j["rows"] = rows;
  // nlohmann sorts object keys, so the serialization is deterministic; the
  // indent keeps reports diffable.
  return j.dump(2) + "\n";
}

}  // namespace boolmax
