#pragma once

namespace shops {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace shops
