// Renders the summary tables (set counts, dead ends, generating set sizes,
// diameters, symmetry groups, incremental counts) from a run of databases
// for degrees 1..n. Output is deterministic: equal inputs render to equal
// bytes.
#pragma once

#include <string>
#include <vector>

#include "indgen/search.hpp"

namespace indgen {

enum class OutputFormat { Text, Csv, Json };

std::optional<OutputFormat> format_from_string(std::string_view s);
std::string_view to_string(OutputFormat f);

// by_degree[i] is the database for degree i+1; all entries must be non-null
// and in degree order starting at 1.
std::string render_tables(const std::vector<const ClassDatabase*>& by_degree,
                          OutputFormat format);

} // namespace indgen
