#pragma once

#include <string_view>

namespace upset {

inline constexpr std::string_view version = "0.1.0";

}  // namespace upset
