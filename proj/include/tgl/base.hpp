#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tgl {

// Exact integers everywhere; no rational arithmetic is needed anywhere in the
// library (all divisions that occur are exact).
using Int = mpz_class;

// Subsets of a ground set are bitmasks. Ground sets are capped at 24 elements
// so every subset sweep (2^|E|) stays at desk scale.
using Mask = std::uint32_t;

inline constexpr int kMaxGroundSize = 24;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }
inline Mask all_elements(int n) { return n == 0 ? 0u : ((Mask{1} << n) - 1u); }

// Deterministic 64-bit stream (splitmix64). Every randomized procedure in the
// library draws from one of these, so identical seeds give identical results
// on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [lo, hi]. Modulo bias is irrelevant for our ranges
  // and keeping the mapping trivial keeps it portable.
  long next_in(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Stream seed for one verification task: global seed + canonical input key.
// Parallel and serial runs hand each task the same stream.
inline std::uint64_t derive_stream_seed(std::uint64_t global_seed, std::string_view key) {
  Rng mix(global_seed ^ fnv1a64(key));
  return mix.next();
}

}  // namespace tgl
