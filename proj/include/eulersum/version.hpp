#pragma once

namespace eulersum {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace eulersum
