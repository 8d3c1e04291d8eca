// Line-oriented persistence for class databases: one JSON header line with
// degree, strategy, engine version and totals, then one JSON record per
// line. Files are written to a temporary name and renamed into place.
#pragma once

#include <filesystem>

#include "indgen/search.hpp"

namespace indgen {

void write_database(const ClassDatabase& db, const std::filesystem::path& file);

// Throws std::runtime_error on malformed input or a header whose totals do
// not match the records.
ClassDatabase read_database(const std::filesystem::path& file);

// $INDGEN_CACHE_DIR if set, else ".indgen-cache" under the current directory.
std::filesystem::path default_cache_dir();

// Cache file for one degree, keyed by degree and engine version.
std::filesystem::path cache_path(const std::filesystem::path& dir, int degree);

} // namespace indgen
