#pragma once

namespace thinset {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace thinset
