#pragma once

#include <string_view>

namespace vne {

inline constexpr std::string_view kVersion = "0.3.0";

}  // namespace vne
