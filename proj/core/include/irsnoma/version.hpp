#pragma once

namespace irsnoma {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace irsnoma
