#include "s2g/table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace s2g {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) throw std::logic_error("Table: row width does not match header");
  rows_.push_back(std::move(row));
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) return v;
        else if constexpr (std::is_same_v<T, double>) return format_double(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else return std::to_string(v);
      },
      c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          // JSON has no inf/nan; keep them as the CSV spelling.
          if (!std::isfinite(v)) return format_double(v);
          return nlohmann::ordered_json::parse(format_double(v));
        } else {
          return v;
        }
      },
      c);
}

}  // namespace

void Table::write_csv(std::ostream& os) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << csv_field(columns_[i]);
  os << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(cell_text(row[i]));
    os << '\n';
  }
}

void Table::write_json(std::ostream& os) const {
  nlohmann::ordered_json doc;
  doc["meta"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : meta_) doc["meta"][k] = cell_json(v);
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[columns_[i]] = cell_json(row[i]);
    doc["rows"].push_back(std::move(obj));
  }
  os << doc.dump(2) << '\n';
}

}  // namespace s2g
