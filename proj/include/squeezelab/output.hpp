#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace squeezelab::cli {

enum class Format { table, csv, json };

/// Throws std::invalid_argument for anything but "table", "csv", "json".
Format parse_format(const std::string& name);

/// One command's output: named numeric columns plus the invocation
/// parameters. Serialized identically for every command so golden tests
/// stay uniform. `row_labels` is optional (used by `verify` to name its
/// checks); when empty it is omitted from the serialized forms.
///
/// JSON schema:
///   { "command": str, "parameters": {..}, "columns": [str..],
///     "row_labels": [str..] (optional), "rows": [[num..]..] }
struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, nlohmann::ordered_json>> parameters;
  std::vector<std::string> columns;
  std::vector<std::string> row_labels;
  std::vector<std::vector<double>> rows;
};

/// Fixed-precision scientific form with 13 significant digits, e.g.
/// "1.619822092898e+00". Used by the table and csv serializers; the json
/// serializer emits shortest round-trip doubles instead.
std::string format_number(double v);

std::string serialize(const OutputRecord& record, Format format);

}  // namespace squeezelab::cli
