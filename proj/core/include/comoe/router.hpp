#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "comoe/experts.hpp"
#include "comoe/numeric.hpp"

namespace comoe {

/// Router input layout: hashed character 3-gram counts of query|title
/// (unit L2 unless the text is empty) followed by a one-hot nation block.
struct FeaturizerConfig {
  std::size_t text_buckets = 256;
  std::vector<std::string> nations;

  std::size_t feature_dim() const { return text_buckets + nations.size(); }
  int nation_index(const std::string& code) const;
};

Vec featurize(const Request& request, const FeaturizerConfig& config);

/// Learnable router state: logits = W * features + b, one row per expert.
struct RouterParams {
  Matrix w;  // N x F
  Vec b;     // N
};

enum class RouteStrategy { Rule, Pseudo, Soft, Hard };

std::string to_string(RouteStrategy s);
RouteStrategy route_strategy_from_string(const std::string& s);

/// Outcome of routing one request: the sparse expert set with renormalized
/// gate weights (ascending expert id, weights sum to 1) plus the full gate
/// distribution over all N experts.
struct RoutingDecision {
  std::vector<std::pair<int, double>> selected;
  Vec full_probs;
  RouteStrategy strategy = RouteStrategy::Hard;

  /// Top-1 assignment used for dispatch-fraction statistics (ties -> lower id).
  int top1() const;
};

/// Static nation -> expert assignment for rule-based routing.
struct RuleTable {
  std::map<std::string, int> nation_to_expert;
};

/// Single-expert rule routing; gate weight 1, one-hot distribution.
/// Throws ConfigError when the nation is unmapped.
RoutingDecision route_rule(const Request& request, const RuleTable& table, std::size_t n_experts);

/// Threshold routing over softmax(W x + b): experts with p > tau, capped to
/// the k_max highest, argmax fallback when none clear the threshold.
RoutingDecision route_soft(const Vec& features, const RouterParams& params, double tau,
                           std::size_t k_max);

/// Top-k routing over softmax(W x + b); ties break toward the lower expert id.
RoutingDecision route_hard_topk(const Vec& features, const RouterParams& params, std::size_t k);

/// Routing decision from precomputed gate probabilities (shared core of the
/// soft/hard strategies; also used by the trainer's backward pass).
RoutingDecision select_topk(const Vec& probs, std::size_t k, RouteStrategy tag);
RoutingDecision select_threshold(const Vec& probs, double tau, std::size_t k_max);

/// Index of the smallest per-expert loss (ties -> lower id).
int pseudo_label_assign(const Vec& per_expert_losses);

/// Batch dispatch statistics feeding the load-balancing loss: dispatch_frac
/// holds top-1 assignment fractions, mean_prob the batch-mean gate
/// probability per expert.
struct LoadBalanceStats {
  Vec dispatch_frac;
  Vec mean_prob;
};

/// Switch-style balancing objective N * sum_i f_i * P_i; minimized (at 1.0)
/// by the uniform distribution when f == P.
double load_balance_loss(const LoadBalanceStats& stats);

/// Shannon entropy -sum p ln p with 0 ln 0 := 0; in [0, ln N].
double entropy_regularizer(const Vec& probs);

}  // namespace comoe
