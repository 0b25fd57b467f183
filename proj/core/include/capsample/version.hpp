#pragma once

namespace capsample {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace capsample
