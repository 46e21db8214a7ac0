#pragma once

#include <cstdint>
#include <string_view>

namespace comoe {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014). The single integer mixing
/// primitive behind every random stream and hash in this project; bit-exact
/// on any platform with 64-bit unsigned arithmetic.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

/// Derive an independent stream seed from a base seed and a salt.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  return splitmix64_mix(seed ^ (salt * 0x9E3779B97F4A7C15ULL));
}

/// Hash a byte string into 64 bits by folding each byte through the
/// SplitMix64 finalizer. Deterministic and platform-independent.
std::uint64_t hash64(std::string_view bytes, std::uint64_t salt);

/// Deterministic seedable generator: the SplitMix64 sequence. Identical seed
/// gives an identical stream on every platform. Single-owner; never shared
/// across threads.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return splitmix64_mix(state_);
  }

  /// Uniform double in [0, 1), 53 mantissa bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Uniform integer in [0, n). Modulo reduction; bias is negligible for the
  /// small n used here and the reduction is part of the pinned stream format.
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace comoe
