#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace knotgraph {

/// Ordered `key=value` pairs. Blank lines and lines starting with '#' are
/// ignored; keys and values are trimmed; a repeated key is an error.
using KeyValues = std::map<std::string, std::string, std::less<>>;

KeyValues parse_key_values(std::string_view text);
KeyValues read_key_values(const std::filesystem::path& path);

/// Canonical text form: sorted `key=value` lines.
std::string render_key_values(const KeyValues& kv);

double kv_double(const KeyValues& kv, std::string_view key, double fallback);
long long kv_int(const KeyValues& kv, std::string_view key, long long fallback);
std::string kv_string(const KeyValues& kv, std::string_view key, std::string_view fallback);

}  // namespace knotgraph
