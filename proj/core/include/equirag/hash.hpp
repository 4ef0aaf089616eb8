#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace equirag {

/// FNV-1a over bytes. Platform-independent, unlike std::hash.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

/// splitmix64 finalizer; decorrelates structured inputs.
std::uint64_t mix64(std::uint64_t x);

/// Deterministic uniform draw in [0, 1) keyed by (seed, key).
double unit_draw(std::uint64_t seed, std::string_view key);

/// Hex rendering of a 64-bit hash, used as config fingerprints.
std::string hex64(std::uint64_t x);

}  // namespace equirag
