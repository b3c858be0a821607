#pragma once

namespace chebylie {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace chebylie
