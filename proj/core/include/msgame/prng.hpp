// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#ifndef MSGAME_PRNG_HPP
#define MSGAME_PRNG_HPP

#include <cstdint>

namespace msgame {

// Counter-based deterministic randomness.  Every random draw in the library
// is a pure function of (seed, stream labels), so replays are byte-exact and
// independent of evaluation order.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b);
}

// Uniform draw from {0, ..., n-1} for n >= 1, via 64-bit multiply-shift.
inline std::uint64_t bounded_u64(std::uint64_t bits, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(bits) * static_cast<unsigned __int128>(n)) >> 64);
}

}  // namespace msgame

#endif  // MSGAME_PRNG_HPP
