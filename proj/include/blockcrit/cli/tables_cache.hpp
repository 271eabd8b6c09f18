#pragma once

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>

#include "blockcrit/enumeration/tables.hpp"
#include "blockcrit/error.hpp"

namespace blockcrit::cli {

namespace fs = std::filesystem;

inline constexpr const char* kTablesEnv = "BLOCKCRIT_TABLES";

inline std::string tables_file_name(int rmax) { return "tables-rmax" + std::to_string(rmax) + ".json"; }

/// --tables if given, else $BLOCKCRIT_TABLES, else nothing (no caching).
inline std::optional<fs::path> tables_location(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return fs::path(*flag);
    if (const char* env = std::getenv(kTablesEnv); env && *env) return fs::path(env);
    return std::nullopt;
}

/// Cache file for `rmax` under `location`: a directory gets the standard
/// file name, anything else is taken as the file itself.
inline fs::path tables_cache_file(const fs::path& location, int rmax) {
    if (fs::is_directory(location) || location.filename().empty() || location.extension() != ".json")
        return location / tables_file_name(rmax);
    return location;
}

/// Tables covering at least `rmax`. A cache file is reused when its rmax is
/// large enough and written when it is missing or too small.
inline enumeration::CoeffTables obtain_tables(int rmax, const std::optional<fs::path>& location) {
    if (!location) return enumeration::tables_build(rmax);
    const fs::path file = tables_cache_file(*location, rmax);
    if (fs::exists(file)) {
        auto cached = enumeration::tables_load(file);
        if (cached.rmax >= rmax) return cached;
    }
    auto built = enumeration::tables_build(rmax);
    std::error_code ec;
    if (file.has_parent_path()) fs::create_directories(file.parent_path(), ec);
    if (ec) throw IoError("cannot create " + file.parent_path().string() + ": " + ec.message());
    enumeration::tables_save(built, file);
    return built;
}

} // namespace blockcrit::cli
