#pragma once

namespace cramsim {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace cramsim
