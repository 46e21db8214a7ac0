#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "comoe/numeric.hpp"

namespace comoe {

/// The routing/inference unit: a (query, item title, nation) triple.
struct Request {
  std::int64_t id = 0;
  std::string query;
  std::string title;
  std::string nation;  // market code, e.g. "TH"
};

/// Static description of one mock expert. Skills are per-nation amplitudes
/// in [0,1] applied to the latent relevance direction; latency is the affine
/// virtual-time model base + n * per_item.
struct ExpertProfile {
  int id = 0;
  std::string name;
  std::size_t hidden_dim = 0;
  std::map<std::string, double> skill;
  std::uint64_t base_latency_us = 0;
  std::uint64_t per_item_latency_us = 0;
  std::uint64_t seed = 0;
};

/// Last-token-style hidden vector produced by one expert for one request.
struct ExpertOutput {
  int expert_id = 0;
  Vec hidden;
};

/// Immutable expert lookup. Build validates id uniqueness; profiles are
/// shared read-only across pipeline workers.
class ExpertRegistry {
 public:
  static ExpertRegistry build(std::vector<ExpertProfile> profiles);

  const ExpertProfile& get(int id) const;
  std::size_t size() const { return profiles_.size(); }
  const std::vector<ExpertProfile>& profiles() const { return profiles_; }

 private:
  std::vector<ExpertProfile> profiles_;
};

/// Deterministic stand-in for frozen LLM inference. The output embeds the
/// latent relevance signal of (query, title) along a per-expert unit
/// direction with amplitude skill[nation], plus per-request pseudo-random
/// noise passed through a per-expert signed permutation. Pure function of
/// (profile.seed, query, title, nation): repeated calls are bit-identical.
/// Throws ConfigError when the nation is missing from the skill map.
ExpertOutput expert_forward(const ExpertProfile& profile, const Request& request);

/// Virtual-time cost of running one batch on this expert:
/// base_latency_us + batch_size * per_item_latency_us. batch_size must be >= 1.
std::uint64_t simulate_latency(const ExpertProfile& profile, std::size_t batch_size);

}  // namespace comoe
