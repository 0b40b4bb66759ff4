#pragma once

namespace udw {

inline constexpr const char* kToolName = "udw";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace udw
