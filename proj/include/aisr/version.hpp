#pragma once

namespace aisr {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace aisr
