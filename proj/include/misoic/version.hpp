#pragma once

namespace misoic {

inline constexpr const char* kVersion = "0.1.0";

} // namespace misoic
