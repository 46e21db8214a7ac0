#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "comoe/numeric.hpp"

namespace comoe {

// Salts separating the hash spaces used across the engine. Part of the pinned
// on-disk/behavioral format; do not change.
inline constexpr std::uint64_t kRouterTextSalt = 0x524F555445525F31ULL;
inline constexpr std::uint64_t kSignalSalt = 0x5349474E414C5F31ULL;
inline constexpr std::uint64_t kExpertDirSalt = 0x4558504449525F31ULL;
inline constexpr std::uint64_t kExpertRotSalt = 0x455850524F545F31ULL;
inline constexpr std::uint64_t kExpertNoiseSalt = 0x45584E4F4953455FULL;
inline constexpr std::uint64_t kSplitSalt = 0x53504C49545F3830ULL;
inline constexpr std::uint64_t kVocabSalt = 0x564F4341425F3031ULL;

/// Bucketed character 3-gram counts of `text`, hashed with the SplitMix64
/// chain under `salt`. Strings shorter than 3 characters produce all zeros.
Vec ngram_counts(std::string_view text, std::size_t buckets, std::uint64_t salt);

/// L2-normalize in place; leaves an all-zero vector untouched.
void l2_normalize(Vec& v);

/// Latent relevance signal shared by the synthetic corpus and the mock
/// experts: cosine similarity between hashed 3-gram count vectors of query
/// and title, mapped to [-1, 1]. Query/title pairs with planted token
/// overlap land high, disjoint pairs land low.
double latent_signal(std::string_view query, std::string_view title);

/// Lowercase ASCII copy (bytes outside A-Z pass through).
std::string ascii_lower(std::string_view s);

}  // namespace comoe
