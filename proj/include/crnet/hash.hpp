#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace crnet {

/// SHA-256 digest as 64 lowercase hex characters.
std::string sha256_hex(std::string_view data);

/// Streaming digest of a file's bytes.
std::string sha256_hex_file(const std::filesystem::path& path);

/// Salted one-way participant token: first 16 hex chars of
/// sha256(salt ":" raw_id). Collisions are negligible at the target scale.
std::string anonymize_id(std::string_view raw_id, std::string_view salt);

}  // namespace crnet
