#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace mevac::cli {

enum class Format { csv, json };

using Cell = std::variant<double, long long, std::string, bool>;

/// Fixed-schema table: one header, rows of equal width.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// 17 significant digits, "nan"/"inf" spelled out.
std::string format_double(double x);

/// CSV: header line then one line per row.
/// JSON: {"command", "config", "columns", "rows": [{column: value}]}; non-finite numbers become null.
void write_table(std::ostream& out, const Table& table, Format format, std::string_view command,
                 const nlohmann::json& config);

}  // namespace mevac::cli
