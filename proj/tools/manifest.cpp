#include "manifest.hpp"

#include <array>
#include <stdexcept>

#include <openssl/evp.h>

namespace sesqui::cli {

nlohmann::json RunManifest::to_json() const {
  return {{"tool_version", tool_version}, {"subcommand", subcommand}, {"parameters", parameters},
          {"variant", variant},           {"wall_seconds", wall_seconds}, {"digest", digest}};
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

}  // namespace sesqui::cli
