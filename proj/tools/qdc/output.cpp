#include "output.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

namespace qdctool {

std::string fmt17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("failed while writing '" + path + "'");
}

nlohmann::json make_meta(const std::string& command, nlohmann::json config) {
  nlohmann::json meta;
  meta["schema_version"] = kSchemaVersion;
  meta["tool"] = "qdc";
  meta["tool_version"] = kToolVersion;
  meta["command"] = command;
  meta["config"] = std::move(config);
  return meta;
}

void write_csv_with_sidecar(const std::string& path,
                            const std::vector<std::string>& columns,
                            const std::vector<std::vector<std::string>>& rows,
                            const nlohmann::json& meta) {
  std::string csv;
  csv.reserve(rows.size() * 32 + 64);
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i) csv += ',';
    csv += columns[i];
  }
  csv += '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) csv += ',';
      csv += row[i];
    }
    csv += '\n';
  }
  write_file(path, csv);

  nlohmann::json sidecar = meta;
  sidecar["columns"] = columns;
  sidecar["rows"] = rows.size();
  write_file(path + ".meta.json", sidecar.dump(2) + "\n");
}

void emit_error(const std::string& code, const std::string& message) {
  nlohmann::json j;
  j["error"]["code"] = code;
  j["error"]["message"] = message;
  std::cerr << j.dump() << "\n";
}

}  // namespace qdctool
