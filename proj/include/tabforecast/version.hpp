#pragma once

namespace tabforecast {

inline constexpr const char* kVersion = "tabforecast 0.1.0";

} // namespace tabforecast
