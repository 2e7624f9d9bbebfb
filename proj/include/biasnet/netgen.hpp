#pragma once

#include <cstdint>
#include <vector>

#include "biasnet/graph.hpp"

namespace biasnet {

// Growth model: seed clique on the first m+1 nodes, then every arriving node
// attaches to m distinct existing targets, sampled without replacement with
// weight w(t) = hom(label_u, label_t) * degree(t), where hom(a,b) = h for
// a == b and 1-h otherwise.
struct GenParams {
  NodeId n = 0;
  NodeId m = 1;
  double minority_fraction = 0.0;  // exact count round(f*n), not Bernoulli
  double homophily = 0.5;          // 0 heterophilic, 0.5 neutral, 1 homophilic
  std::uint64_t seed = 0;
};

struct GenReport {
  // Picks where every remaining candidate had zero weight (possible at h=0 or
  // h=1 when the candidate pool is all one label); resolved by a uniform draw
  // among the remaining candidates instead of stalling.
  std::int64_t zero_weight_fallbacks = 0;
};

// Exactly round(f*n) minority labels, positions shuffled by seed.
std::vector<std::uint8_t> label_assignment(NodeId n, double f,
                                           std::uint64_t seed);

// Deterministic for a fixed params.seed. The result has n nodes and
// C(m+1,2) + m*(n-m-1) edges.
Graph generate(const GenParams& params, GenReport* report = nullptr);

}  // namespace biasnet
