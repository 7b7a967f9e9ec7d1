#ifndef LCYCLE_RANDOM_HPP
#define LCYCLE_RANDOM_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace lcycle {

using Rng = std::mt19937_64;

/// Deterministic child stream of `seed` addressed by a path of indices, e.g.
/// substream(seed, {generation, ant}). Streams with different paths are
/// statistically independent for practical purposes.
inline Rng substream(std::uint64_t seed,
                     std::initializer_list<std::uint64_t> path) {
  std::vector<std::uint32_t> words;
  words.reserve(2 + 2 * path.size());
  auto push = [&words](std::uint64_t x) {
    words.push_back(static_cast<std::uint32_t>(x));
    words.push_back(static_cast<std::uint32_t>(x >> 32));
  };
  push(seed);
  for (auto p : path) push(p);
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

/// Uniform real in [0, 1) built from the top 53 bits of one draw.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound). bound must be positive.
inline std::size_t uniform_index(Rng& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

}  // namespace lcycle

#endif  // LCYCLE_RANDOM_HPP
