#include "comoe/fusion.hpp"

#include <string>

#include "comoe/error.hpp"
#include "comoe/text.hpp"

namespace comoe {

Vec project(const ExpertOutput& output, const ProjectionLayer& layer) {
  const std::size_t idx = static_cast<std::size_t>(output.expert_id);
  if (output.expert_id < 0 || idx >= layer.w.size()) {
    throw ConfigError("project: no projection for expert " + std::to_string(output.expert_id));
  }
  if (layer.w[idx].cols != output.hidden.size()) {
    throw DimensionError("project: expert " + std::to_string(output.expert_id) + " emits " +
                         std::to_string(output.hidden.size()) + " dims but projection expects " +
                         std::to_string(layer.w[idx].cols));
  }
  return affine(layer.w[idx], output.hidden, layer.b[idx]);
}

FusedRepresentation concat_fuse(const RoutingDecision& decision,
                                const std::map<int, Vec>& projected, std::size_t k,
                                const FusionOptions& options) {
  if (decision.selected.size() > k) {
    throw DimensionError("concat_fuse: decision selects " +
                         std::to_string(decision.selected.size()) + " experts but k=" +
                         std::to_string(k));
  }
  std::size_t d = 0;
  for (const auto& [id, vec] : projected) {
    (void)id;
    d = vec.size();
    break;
  }
  FusedRepresentation fused;
  fused.z.assign(k * d, 0.0);
  fused.slot_ids.assign(k, -1);
  fused.slot_gates.assign(k, 0.0);

  // decision.selected is already ordered by ascending expert id.
  std::size_t slot = 0;
  for (const auto& [expert_id, gate] : decision.selected) {
    const auto it = projected.find(expert_id);
    if (it == projected.end()) {
      throw ConfigError("concat_fuse: missing projected embedding for expert " +
                        std::to_string(expert_id));
    }
    const Vec& h = it->second;
    const double scale = options.gate_scaled ? gate : 1.0;
    for (std::size_t j = 0; j < d; ++j) fused.z[slot * d + j] = scale * h[j];
    fused.slot_ids[slot] = expert_id;
    fused.slot_gates[slot] = gate;
    ++slot;
  }
  return fused;
}

Vec weighted_fuse(const RoutingDecision& decision, const std::map<int, Vec>& projected) {
  Vec mix;
  for (const auto& [expert_id, gate] : decision.selected) {
    const auto it = projected.find(expert_id);
    if (it == projected.end()) {
      throw ConfigError("weighted_fuse: missing projected embedding for expert " +
                        std::to_string(expert_id));
    }
    if (mix.empty()) mix.assign(it->second.size(), 0.0);
    for (std::size_t j = 0; j < mix.size(); ++j) mix[j] += gate * it->second[j];
  }
  return mix;
}

double classify_logit(const Vec& z, const ClassifierHead& head) {
  if (head.w_p.cols != z.size()) {
    throw DimensionError("classify: input has " + std::to_string(z.size()) +
                         " dims but head expects " + std::to_string(head.w_p.cols));
  }
  const Vec hidden = relu(affine(head.w_p, z, head.b_p));
  double logit = head.b_c;
  for (std::size_t j = 0; j < hidden.size(); ++j) logit += head.w_c.at(0, j) * hidden[j];
  return logit;
}

double classify(const Vec& z, const ClassifierHead& head) { return sigmoid(classify_logit(z, head)); }

}  // namespace comoe
