#pragma once

namespace tsecon {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace tsecon
