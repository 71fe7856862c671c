#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace bose::cli {

using KeyValues = std::map<std::string, std::string>;

/// Parses `key = value` lines. Blank lines and lines starting with '#' are
/// skipped. Throws ConfigError on malformed lines or duplicate keys.
KeyValues parse_config_text(std::string_view text);

KeyValues load_config(const std::filesystem::path& path);

/// Parses BOSE_EOS_THREADS; returns `fallback` when unset.
unsigned thread_cap(const char* env_value, unsigned fallback);

}  // namespace bose::cli
