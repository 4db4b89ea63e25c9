#pragma once

namespace dirac1d {

inline constexpr const char* kVersion = "dirac1d 0.1.0";

}  // namespace dirac1d
