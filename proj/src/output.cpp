#include "squeezelab/output.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace squeezelab::cli {

Format parse_format(const std::string& name) {
  if (name == "table") return Format::table;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + name +
                              "' (expected table, csv, or json)");
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12e", v);
  return buf;
}

namespace {

std::string to_csv(const OutputRecord& r) {
  std::ostringstream out;
  const bool labeled = !r.row_labels.empty();
  if (labeled) out << "label,";
  for (std::size_t c = 0; c < r.columns.size(); ++c) {
    out << r.columns[c] << (c + 1 < r.columns.size() ? "," : "");
  }
  out << '\n';
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    if (labeled) out << r.row_labels[i] << ',';
    for (std::size_t c = 0; c < r.rows[i].size(); ++c) {
      out << format_number(r.rows[i][c])
          << (c + 1 < r.rows[i].size() ? "," : "");
    }
    out << '\n';
  }
  return out.str();
}

std::string to_json(const OutputRecord& r) {
  nlohmann::ordered_json doc;
  doc["command"] = r.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.parameters) params[key] = value;
  doc["parameters"] = params;
  doc["columns"] = r.columns;
  if (!r.row_labels.empty()) doc["row_labels"] = r.row_labels;
  doc["rows"] = r.rows;
  return doc.dump(2) + "\n";
}

std::string to_table(const OutputRecord& r) {
  std::ostringstream out;
  out << "command: " << r.command << '\n';
  if (!r.parameters.empty()) {
    out << "parameters:\n";
    for (const auto& [key, value] : r.parameters) {
      out << "  " << key << " = "
          << (value.is_string() ? value.get<std::string>() : value.dump())
          << '\n';
    }
  }
  const bool labeled = !r.row_labels.empty();
  std::size_t label_width = 5;
  for (const auto& label : r.row_labels) {
    label_width = std::max(label_width, label.size());
  }
  constexpr int kColWidth = 20;
  if (labeled) out << std::string(label_width, ' ');
  for (const auto& col : r.columns) {
    const int pad = kColWidth - static_cast<int>(col.size());
    out << std::string(pad > 1 ? pad : 1, ' ') << col;
  }
  out << '\n';
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    if (labeled) {
      out << r.row_labels[i]
          << std::string(label_width - r.row_labels[i].size(), ' ');
    }
    for (double v : r.rows[i]) {
      const std::string s = format_number(v);
      const int pad = kColWidth - static_cast<int>(s.size());
      out << std::string(pad > 1 ? pad : 1, ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string serialize(const OutputRecord& record, Format format) {
  switch (format) {
    case Format::csv:
      return to_csv(record);
    case Format::json:
      return to_json(record);
    case Format::table:
      return to_table(record);
  }
  throw std::logic_error("serialize: unreachable");
}

}  // namespace squeezelab::cli
