#pragma once

namespace lagten {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lagten
