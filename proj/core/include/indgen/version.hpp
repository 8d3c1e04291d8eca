#pragma once

#include <string_view>

namespace indgen {

inline constexpr std::string_view kEngineName = "indgen";
inline constexpr std::string_view kEngineVersion = "0.1.0";

} // namespace indgen
