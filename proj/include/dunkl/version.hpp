#pragma once

namespace dunkl {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dunkl
