#include "output.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace mevac::cli {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("table row width does not match header");
  }
  rows.push_back(std::move(row));
}

std::string format_double(double x) {
  if (std::isnan(x)) {
    return "nan";
  }
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  return fmt::format("{:.17g}", x);
}

namespace {

struct CsvCell {
  std::string operator()(double x) const { return format_double(x); }
  std::string operator()(long long x) const { return std::to_string(x); }
  std::string operator()(const std::string& s) const { return s; }
  std::string operator()(bool b) const { return b ? "true" : "false"; }
};

struct JsonCell {
  nlohmann::json operator()(double x) const { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(); }
  nlohmann::json operator()(long long x) const { return x; }
  nlohmann::json operator()(const std::string& s) const { return s; }
  nlohmann::json operator()(bool b) const { return b; }
};

}  // namespace

void write_table(std::ostream& out, const Table& table, Format format, std::string_view command,
                 const nlohmann::json& config) {
  if (format == Format::csv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i ? "," : "") << std::visit(CsvCell{}, row[i]);
      }
      out << '\n';
    }
    return;
  }
  nlohmann::json doc;
  doc["command"] = command;
  doc["config"] = config;
  doc["columns"] = table.columns;
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      obj[table.columns[i]] = std::visit(JsonCell{}, row[i]);
    }
    doc["rows"].push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace mevac::cli
