#pragma once

#include <cstdint>

namespace horn {

inline constexpr const char* kVersion = "0.1.0";

// Default RNG seed used by every randomized routine unless overridden.
inline constexpr std::uint64_t kDefaultSeed = 7;

}  // namespace horn
