#pragma once

#include <cstdint>
#include <random>

namespace progmix {

// SplitMix64 finaliser; used only to derive independent seeds.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31U);
}

// The generator used for every seeded computation.
using Rng = std::mt19937_64;

// Substream `index` of `seed`.  Sample i of an experiment always draws from
// substream(seed, i), whichever worker evaluates it.
inline Rng substream(std::uint64_t seed, std::uint64_t index) {
  return Rng(mix64(mix64(seed) ^ mix64(index + 0x632be59bd9b4e019ULL)));
}

template <class Int>
Int uniform_index(Rng& rng, Int n) {
  return std::uniform_int_distribution<Int>(0, n - 1)(rng);
}

}  // namespace progmix
