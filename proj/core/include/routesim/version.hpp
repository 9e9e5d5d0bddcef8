#pragma once

namespace routesim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace routesim
