#include "comoe/text.hpp"

#include <cmath>

#include "comoe/rng.hpp"

namespace comoe {

namespace {

constexpr std::size_t kSignalBuckets = 128;

std::uint64_t pack3(unsigned char a, unsigned char b, unsigned char c) {
  return (static_cast<std::uint64_t>(a) << 16) | (static_cast<std::uint64_t>(b) << 8) |
         static_cast<std::uint64_t>(c);
}

}  // namespace

Vec ngram_counts(std::string_view text, std::size_t buckets, std::uint64_t salt) {
  Vec counts(buckets, 0.0);
  if (text.size() < 3) return counts;
  const std::uint64_t base = splitmix64_mix(salt ^ 0xD1B54A32D192ED03ULL);
  for (std::size_t i = 0; i + 3 <= text.size(); ++i) {
    const std::uint64_t h = splitmix64_mix(
        base ^ pack3(static_cast<unsigned char>(text[i]), static_cast<unsigned char>(text[i + 1]),
                     static_cast<unsigned char>(text[i + 2])));
    counts[h % buckets] += 1.0;
  }
  return counts;
}

void l2_normalize(Vec& v) {
  double ss = 0.0;
  for (double x : v) ss += x * x;
  if (ss == 0.0) return;
  const double inv = 1.0 / std::sqrt(ss);
  for (double& x : v) x *= inv;
}

double latent_signal(std::string_view query, std::string_view title) {
  const Vec q = ngram_counts(ascii_lower(query), kSignalBuckets, kSignalSalt);
  const Vec t = ngram_counts(ascii_lower(title), kSignalBuckets, kSignalSalt);
  double dot = 0.0, qq = 0.0, tt = 0.0;
  for (std::size_t i = 0; i < kSignalBuckets; ++i) {
    dot += q[i] * t[i];
    qq += q[i] * q[i];
    tt += t[i] * t[i];
  }
  if (qq == 0.0 || tt == 0.0) return -1.0;
  const double cosine = dot / std::sqrt(qq * tt);
  return 2.0 * cosine - 1.0;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace comoe
