#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace s2g {

/// A cell is text (including exact "p/q" rationals), a double, an integer or a flag.
using Cell = std::variant<std::string, double, std::int64_t, bool>;

/// Doubles as %.16e, i.e. 17 significant digits, which round-trips.
std::string format_double(double v);

class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add_meta(std::string key, Cell value) { meta_.emplace_back(std::move(key), std::move(value)); }
  void add_row(std::vector<Cell> row);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

  /// Header row then one line per row, RFC 4180 quoting.
  void write_csv(std::ostream& os) const;
  /// {"meta": {...}, "rows": [{column: value, ...}, ...]}
  void write_json(std::ostream& os) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::pair<std::string, Cell>> meta_;
  std::vector<std::vector<Cell>> rows_;
};

}  // namespace s2g
