#pragma once

namespace sidewinder {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sidewinder
