#ifndef BOOLMAX_REPORT_HPP
#define BOOLMAX_REPORT_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace boolmax {

// One report cell; doubles are printed with 17 significant digits so that
// reports round-trip bit-exactly.
using Cell = std::variant<double, long long, bool, std::string>;

std::string format_cell(const Cell& cell);

// A deterministic tabular report: fixed column order, rows in the order
// appended, LF line endings.  Summary entries are scalar facts about the
// whole run; CSV repeats them as trailing columns on every row, JSON emits
// them once under "summary".
class Report {
 public:
  Report(std::string command, std::vector<std::string> columns)
      : command_(std::move(command)), columns_(std::move(columns)) {}

  void add_row(std::vector<Cell> row);
  void add_summary(const std::string& key, Cell value);
  void set_diagnostic(const std::string& message) { diagnostic_ = message; }
  void set_config_echo(const std::string& key, const std::string& value);

  std::string to_csv() const;
  std::string to_json() const;

  std::size_t row_count() const noexcept { return rows_.size(); }

 private:
  std::string command_;
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
  std::vector<std::pair<std::string, Cell>> summary_;
  std::vector<std::pair<std::string, std::string>> config_;
  std::string diagnostic_;
};

}  // namespace boolmax

#endif  // BOOLMAX_REPORT_HPP
