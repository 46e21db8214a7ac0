#include "comoe/router.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "comoe/error.hpp"
#include "comoe/rng.hpp"
#include "comoe/text.hpp"

namespace comoe {

int FeaturizerConfig::nation_index(const std::string& code) const {
  for (std::size_t i = 0; i < nations.size(); ++i) {
    if (nations[i] == code) return static_cast<int>(i);
  }
  return -1;
}

Vec featurize(const Request& request, const FeaturizerConfig& config) {
  const std::string text = ascii_lower(request.query) + "|" + ascii_lower(request.title);
  Vec text_block = ngram_counts(text, config.text_buckets, kRouterTextSalt);
  l2_normalize(text_block);

  Vec x(config.feature_dim(), 0.0);
  std::copy(text_block.begin(), text_block.end(), x.begin());
  const int ni = config.nation_index(request.nation);
  if (ni < 0) {
    throw ConfigError("featurize: nation '" + request.nation + "' not in configured set");
  }
  x[config.text_buckets + static_cast<std::size_t>(ni)] = 1.0;
  return x;
}

std::string to_string(RouteStrategy s) {
  switch (s) {
    case RouteStrategy::Rule: return "rule";
    case RouteStrategy::Pseudo: return "pseudo";
    case RouteStrategy::Soft: return "soft";
    case RouteStrategy::Hard: return "hard";
  }
  return "hard";
}

RouteStrategy route_strategy_from_string(const std::string& s) {
  if (s == "rule") return RouteStrategy::Rule;
  if (s == "pseudo") return RouteStrategy::Pseudo;
  if (s == "soft") return RouteStrategy::Soft;
  if (s == "hard") return RouteStrategy::Hard;
  throw ConfigError("unknown routing strategy '" + s + "'");
}

int RoutingDecision::top1() const {
  int best = 0;
  for (std::size_t i = 1; i < full_probs.size(); ++i) {
    if (full_probs[i] > full_probs[best]) best = static_cast<int>(i);
  }
  return best;
}

namespace {

// Expert indices ordered by (probability desc, id asc).
std::vector<int> rank_by_prob(const Vec& probs) {
  std::vector<int> idx(probs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return probs[a] > probs[b]; });
  return idx;
}

RoutingDecision finish_selection(const Vec& probs, std::vector<int> chosen, RouteStrategy tag) {
  std::sort(chosen.begin(), chosen.end());
  double z = 0.0;
  for (int i : chosen) z += probs[i];
  RoutingDecision d;
  d.strategy = tag;
  d.full_probs = probs;
  d.selected.reserve(chosen.size());
  for (int i : chosen) d.selected.emplace_back(i, probs[i] / z);
  return d;
}

}  // namespace

RoutingDecision select_topk(const Vec& probs, std::size_t k, RouteStrategy tag) {
  if (k < 1 || k > probs.size()) {
    throw ConfigError("select_topk: k=" + std::to_string(k) + " with N=" +
                      std::to_string(probs.size()));
  }
  const std::vector<int> ranked = rank_by_prob(probs);
  return finish_selection(probs, {ranked.begin(), ranked.begin() + static_cast<long>(k)}, tag);
}

RoutingDecision select_threshold(const Vec& probs, double tau, std::size_t k_max) {
  if (!(tau > 0.0 && tau < 1.0)) {
    throw ConfigError("select_threshold: tau must lie in (0,1)");
  }
  const std::vector<int> ranked = rank_by_prob(probs);
  std::vector<int> chosen;
  for (int i : ranked) {
    if (probs[i] > tau && chosen.size() < k_max) chosen.push_back(i);
  }
  if (chosen.empty()) chosen.push_back(ranked.front());  // argmax fallback
  return finish_selection(probs, std::move(chosen), RouteStrategy::Soft);
}

RoutingDecision route_rule(const Request& request, const RuleTable& table, std::size_t n_experts) {
  const auto it = table.nation_to_expert.find(request.nation);
  if (it == table.nation_to_expert.end()) {
    throw ConfigError("rule table has no expert for nation '" + request.nation + "'");
  }
  const int id = it->second;
  if (id < 0 || static_cast<std::size_t>(id) >= n_experts) {
    throw ConfigError("rule table maps nation '" + request.nation + "' to unknown expert " +
                      std::to_string(id));
  }
  RoutingDecision d;
  d.strategy = RouteStrategy::Rule;
  d.full_probs.assign(n_experts, 0.0);
  d.full_probs[static_cast<std::size_t>(id)] = 1.0;
  d.selected = {{id, 1.0}};
  return d;
}

RoutingDecision route_soft(const Vec& features, const RouterParams& params, double tau,
                           std::size_t k_max) {
  return select_threshold(softmax(affine(params.w, features, params.b)), tau, k_max);
}

RoutingDecision route_hard_topk(const Vec& features, const RouterParams& params, std::size_t k) {
  return select_topk(softmax(affine(params.w, features, params.b)), k, RouteStrategy::Hard);
}

int pseudo_label_assign(const Vec& per_expert_losses) {
  int best = 0;
  for (std::size_t i = 1; i < per_expert_losses.size(); ++i) {
    if (per_expert_losses[i] < per_expert_losses[best]) best = static_cast<int>(i);
  }
  return best;
}

double load_balance_loss(const LoadBalanceStats& stats) {
  if (stats.dispatch_frac.size() != stats.mean_prob.size()) {
    throw DimensionError("load_balance_loss: f and P sizes differ");
  }
  const std::size_t n = stats.dispatch_frac.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += stats.dispatch_frac[i] * stats.mean_prob[i];
  return static_cast<double>(n) * sum;
}

double entropy_regularizer(const Vec& probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

}  // namespace comoe
