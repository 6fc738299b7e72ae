#pragma once

namespace clocksim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace clocksim
