#include "nroot/output.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <nlohmann/json.hpp>

#include "nroot/errors.hpp"

namespace nroot::output {

namespace {

nlohmann::ordered_json to_json(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::count:
      return std::stoll(c.text);
    case Cell::Kind::real:
      return c.real;
    case Cell::Kind::flag:
      return c.text == "true";
    case Cell::Kind::text:
      break;
  }
  return c.text;
}

std::string render_plain(const OutputRecord& record) {
  std::string out;
  out += "# " + record.command;
  for (const auto& [key, value] : record.meta) out += "  " + key + "=" + value.text;
  out += '\n';

  for (const auto& table : record.tables) {
    if (record.tables.size() > 1) out += "## " + table.name + '\n';
    if (table.layout == Table::Layout::inline_pairs) {
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        if (r) out += ", ";
        out += table.rows[r].at(0).text + ": " + table.rows[r].at(1).text;
      }
      out += '\n';
      continue;
    }
    std::vector<std::size_t> width(table.columns.size());
    for (std::size_t c = 0; c < table.columns.size(); ++c) width[c] = table.columns[c].size();
    for (const auto& row : table.rows)
      for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].text.size());

    auto emit = [&](auto&& cell_text, std::size_t count) {
      std::string line;
      for (std::size_t c = 0; c < count; ++c) {
        if (c) line += "  ";
        const std::string text = cell_text(c);
        // first column left-aligned, the rest right-aligned
        if (c == 0)
          line += text + std::string(width[c] - text.size(), ' ');
        else
          line += std::string(width[c] - text.size(), ' ') + text;
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line + '\n';
    };
    emit([&](std::size_t c) { return table.columns[c]; }, table.columns.size());
    for (const auto& row : table.rows) emit([&](std::size_t c) { return row[c].text; }, row.size());
  }
  return out;
}

std::string render_csv(const OutputRecord& record) {
  std::string out;
  for (std::size_t t = 0; t < record.tables.size(); ++t) {
    const auto& table = record.tables[t];
    if (t) out += '\n';
    auto line = [&](auto&& field, std::size_t count) {
      for (std::size_t c = 0; c < count; ++c) {
        if (c) out += ',';
        out += csv_field(field(c));
      }
      out += '\n';
    };
    line([&](std::size_t c) { return table.columns[c]; }, table.columns.size());
    for (const auto& row : table.rows) line([&](std::size_t c) { return row[c].text; }, row.size());
  }
  return out;
}

std::string render_json(const OutputRecord& record) {
  nlohmann::ordered_json doc;
  doc["command"] = record.command;
  for (const auto& [key, value] : record.meta) doc[key] = to_json(value);
  for (const auto& table : record.tables) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      nlohmann::ordered_json obj;
      for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns.at(c)] = to_json(row[c]);
      rows.push_back(std::move(obj));
    }
    doc[table.name] = std::move(rows);
  }
  return doc.dump(2) + '\n';
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "plain") return Format::plain;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw InvalidArgument("unknown format '" + std::string(name) + "' (expected plain, csv or json)");
}

Cell Cell::number(double v, int places) {
  std::string text = fmt::format("{:.{}f}", v, places);
  if (text.find_first_not_of("-0.") == std::string::npos && text.front() == '-') text.erase(0, 1);
  return {Kind::real, std::move(text), v == 0.0 ? 0.0 : v};
}

const Cell* OutputRecord::find_meta(std::string_view key) const {
  for (const auto& [k, v] : meta)
    if (k == key) return &v;
  return nullptr;
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::string render(const OutputRecord& record, Format format) {
  switch (format) {
    case Format::csv:
      return render_csv(record);
    case Format::json:
      return render_json(record);
    case Format::plain:
      break;
  }
  return render_plain(record);
}

}  // namespace nroot::output
