#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace sesqui::cli {

// What was run and a digest of what it produced. Wall time is recorded but
// kept out of the digest.
struct RunManifest {
  std::string tool_version;
  std::string subcommand;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json variant = nlohmann::json::object();
  double wall_seconds = 0;
  std::string digest;

  nlohmann::json to_json() const;
};

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

}  // namespace sesqui::cli
