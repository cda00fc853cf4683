#pragma once

namespace pflab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pflab
