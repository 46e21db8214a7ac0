#pragma once

#include <map>
#include <vector>

#include "comoe/experts.hpp"
#include "comoe/numeric.hpp"
#include "comoe/router.hpp"

namespace comoe {

/// Per-expert affine maps into the shared fusion dimension d.
struct ProjectionLayer {
  std::vector<Matrix> w;  // expert i: d x d_i
  std::vector<Vec> b;     // expert i: d
  std::size_t shared_dim = 0;
};

/// Behavior switches for the fusion path. Gate scaling multiplies each
/// concatenation slot by its gate weight, which is what gives the router a
/// task-loss gradient under hard routing; switching it off reproduces plain
/// unscaled concatenation. l2_normalize renormalizes projected embeddings
/// before fusing; it is applied by the model forward path, not in here.
struct FusionOptions {
  bool gate_scaled = true;
  bool l2_normalize = false;
};

/// Project one expert output into the shared space. Throws on a missing
/// projection or width mismatch.
Vec project(const ExpertOutput& output, const ProjectionLayer& layer);

/// Fixed-slot concatenation z in R^{k*d}: selected experts occupy slots in
/// ascending expert-id order, each slot scaled by its gate weight (see
/// FusionOptions); remaining slots stay zero with gate 0 and slot id -1.
struct FusedRepresentation {
  Vec z;
  std::vector<int> slot_ids;
  Vec slot_gates;
};

FusedRepresentation concat_fuse(const RoutingDecision& decision,
                                const std::map<int, Vec>& projected, std::size_t k,
                                const FusionOptions& options = {});

/// Scalar-mixing baseline: sum_i gate_i * h_i' in R^d.
Vec weighted_fuse(const RoutingDecision& decision, const std::map<int, Vec>& projected);

/// Two-layer relevance head: y = sigmoid(W_c * relu(W_p z + b_p) + b_c).
struct ClassifierHead {
  Matrix w_p;   // m x input_width
  Vec b_p;      // m
  Matrix w_c;   // 1 x m
  double b_c = 0.0;
};

/// Pre-sigmoid relevance logit; loss computation stays in logit space.
double classify_logit(const Vec& z, const ClassifierHead& head);

/// Relevance score in (0, 1).
double classify(const Vec& z, const ClassifierHead& head);

}  // namespace comoe
