#pragma once

// Tabular output for the CLI: CSV with a header row or a JSON array of
// row objects.

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace qprimes::cli {

using Cell = std::variant<std::uint64_t, std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
};

enum class Format { csv, json };

/// %.17g, so every double round-trips.
std::string format_double(double v);
/// RFC 4180: quote when the field holds a comma, quote, CR or LF.
std::string csv_field(const std::string& s);

void write_csv(std::ostream& out, const Table& t);
nlohmann::json to_json(const Table& t);
void write(std::ostream& out, const Table& t, Format f);

}  // namespace qprimes::cli
