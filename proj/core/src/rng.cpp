#include "comoe/rng.hpp"

namespace comoe {

std::uint64_t hash64(std::string_view bytes, std::uint64_t salt) {
  std::uint64_t h = splitmix64_mix(salt ^ 0xA0761D6478BD642FULL);
  for (unsigned char c : bytes) {
    h = splitmix64_mix(h ^ (static_cast<std::uint64_t>(c) + 0x9E3779B97F4A7C15ULL));
  }
  return h;
}

}  // namespace comoe
