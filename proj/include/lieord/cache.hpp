#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "lieord/weylchar.hpp"

namespace lieord {

inline constexpr int kCacheVersion = 1;

/// dir / "<label>.json"
std::filesystem::path cache_path(const SemisimpleType& type_label, const std::filesystem::path& dir);

/// JSON text of a table: version, type_label, group_order and entries with
/// decimal-string counts.
std::string table_to_json(const CharPolyTable& table);
/// Parses and validates; CacheInvalid names the failed check.
CharPolyTable table_from_json(const std::string& text);

/// Atomic write (temporary file, then rename).
void cache_store(const CharPolyTable& table, const std::filesystem::path& dir);
/// nullopt if the file is absent; CacheInvalid if present but corrupt, of
/// another version, for another type, or failing a certificate.
std::optional<CharPolyTable> cache_load(const SemisimpleType& type_label, const std::filesystem::path& dir);

/// Simple-factor table through the cache: E8 is only ever loaded, other
/// exceptional types are loaded or computed and stored, classical types are
/// computed.
CharPolyTable cached_simple_table(const SimpleType& t, const std::filesystem::path& dir);

/// The E8 table from dir, or nullptr-equivalent nullopt when absent.
std::optional<CharPolyTable> load_e8_table(const std::filesystem::path& dir);

}  // namespace lieord
