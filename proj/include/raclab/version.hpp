#pragma once

namespace raclab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace raclab
