#pragma once

namespace crscope {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace crscope
