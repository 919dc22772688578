#pragma once

namespace frob {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace frob
