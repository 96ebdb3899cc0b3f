#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace qdctool {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CrossCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Round-trip-exact decimal form of a double (17 significant digits).
std::string fmt17(double value);

/// Writes bytes to a file (binary mode so output is byte-stable);
/// throws IoError on failure.
void write_file(const std::string& path, const std::string& content);

/// Shared metadata block: schema version, tool id, command, and the fully
/// resolved configuration (angles already in radians).
nlohmann::json make_meta(const std::string& command, nlohmann::json config);

/// Emits one CSV data file plus its .meta.json sidecar.
void write_csv_with_sidecar(const std::string& path,
                            const std::vector<std::string>& columns,
                            const std::vector<std::vector<std::string>>& rows,
                            const nlohmann::json& meta);

/// Machine-readable failure object on stderr.
void emit_error(const std::string& code, const std::string& message);

}  // namespace qdctool
