#pragma once

#include <string_view>

namespace braid3 {

inline constexpr std::string_view kToolName = "braid3-cosmetic";
// Keep in sync with the CMake project() version.
inline constexpr std::string_view kVersion = "1.0.0";

}  // namespace braid3
