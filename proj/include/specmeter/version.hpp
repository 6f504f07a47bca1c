#pragma once

#include <string_view>

namespace specmeter {

inline constexpr std::string_view tool_name = "specmeter";
inline constexpr std::string_view tool_version = "0.1.0";

}  // namespace specmeter
