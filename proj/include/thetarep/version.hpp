#pragma once

namespace thetarep {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace thetarep
