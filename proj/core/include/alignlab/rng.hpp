#pragma once

#include <cstdint>
#include <initializer_list>

namespace alignlab {

// Counter-based randomness: every variate is a pure function of the integers
// that index it, so draw order and thread scheduling never affect results.

/// SplitMix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Order-sensitive combine of a word list into one hash value.
constexpr std::uint64_t stable_hash(std::initializer_list<std::uint64_t> words) noexcept {
  std::uint64_t h = 0x8c90fd9b1f3cb6e3ULL;
  for (std::uint64_t w : words) h = mix64(h ^ w);
  return h;
}

/// Uniform double in [0, 1) from the top 53 bits of a hash.
constexpr double uniform01(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Sequential generator for the few places that need a stream (shuffles).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  double next_uniform01() noexcept { return uniform01(next()); }

  /// Uniform integer in [0, bound) by rejection; bound must be positive.
  std::uint64_t next_below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

// Stream tags keeping independent purposes on disjoint hash inputs.
inline constexpr std::uint64_t kStreamUserPair = 0x75736572ULL;   // "user"
inline constexpr std::uint64_t kStreamAttrPair = 0x61747472ULL;   // "attr"
inline constexpr std::uint64_t kStreamPerm = 0x7065726dULL;       // "perm"
inline constexpr std::uint64_t kStreamTieBreak = 0x74696562ULL;   // "tieb"

}  // namespace alignlab
