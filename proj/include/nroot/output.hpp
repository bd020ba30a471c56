#pragma once

// Command results and their plain / csv / json renderings.

#include <concepts>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nroot::output {

enum class Format { plain, csv, json };

Format parse_format(std::string_view name);

/// A rendered value. `kind` only affects JSON: text is always a string (big
/// integers included), count and real become numbers, flag a boolean.
struct Cell {
  enum class Kind { text, count, real, flag };
  Kind kind = Kind::text;
  std::string text;
  double real = 0.0;

  static Cell str(std::string s) { return {Kind::text, std::move(s), 0.0}; }
  template <std::integral T>
  static Cell count(T v) { return {Kind::count, std::to_string(v), 0.0}; }
  static Cell number(double v, int places = 6);
  static Cell flag(bool v) { return {Kind::flag, v ? "true" : "false", 0.0}; }
};

struct Table {
  enum class Layout { grid, inline_pairs };
  std::string name = "rows";
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// inline_pairs: two columns rendered in plain format as "a: b, c: d".
  Layout layout = Layout::grid;
};

struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, Cell>> meta;
  std::vector<Table> tables;

  OutputRecord& add_meta(std::string key, Cell value) {
    meta.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  const Cell* find_meta(std::string_view key) const;
};

std::string render(const OutputRecord& record, Format format);

/// Quotes a CSV field when it contains a comma, quote or line break.
std::string csv_field(std::string_view field);

}  // namespace nroot::output
