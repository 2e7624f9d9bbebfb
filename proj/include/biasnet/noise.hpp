#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "biasnet/graph.hpp"

namespace biasnet {

// Constant retain probability p for every edge.
struct BaselineNoise {
  double p = 1.0;
};

// Retain probability looked up from the endpoint labels: omega[l_i][l_j].
// omega must be square, symmetric, with entries in [0,1], and large enough
// for every label used by the graph.
struct AttributeNoise {
  std::vector<std::vector<double>> omega;
};

// Retain probability J^alpha (or (1-J)^alpha when inverse), where J is the
// Jaccard similarity of the endpoints' augmented neighborhoods; each node
// counts as part of its own neighborhood, so J > 0 for every existing edge.
struct JaccardNoise {
  double alpha = 0.0;
  bool inverse = false;
};

// Retain probability D^alpha (or (1-D)^alpha when inverse), where D is the
// min-max normalization of log(deg_i) + log(deg_j) over the edge set. Edges
// in the low-degree periphery are dropped first.
struct CentralityNoise {
  double alpha = 0.0;
  bool inverse = false;
};

using NoiseSpec =
    std::variant<BaselineNoise, AttributeNoise, JaccardNoise, CentralityNoise>;

enum class OmegaKind { Intra, Inter, Majority, Minority };

// 2x2 retain matrices: the targeted entries get rho, the rest keep `other`.
//   intra:    {{rho, other}, {other, rho}}
//   inter:    {{other, rho}, {rho, other}}
//   majority: {{rho, rho},   {rho, other}}
//   minority: {{other, rho}, {rho, rho}}
AttributeNoise omega_preset(OmegaKind kind, double rho, double other = 0.9);

// Per-edge retain probabilities, aligned with the canonical sorted edge order
// of the graph they were computed from. The edge list is carried along so a
// mismatched graph/probability pairing can be rejected.
struct RetainProbabilities {
  std::vector<Edge> edges;
  std::vector<double> probs;
};

RetainProbabilities retain_probs(const Graph& g, const NoiseSpec& spec);

// Similarity of the augmented neighborhoods {i} u N(i) and {j} u N(j).
// Requires {i,j} to be an edge of g.
double jaccard_similarity(const Graph& g, NodeId i, NodeId j);

// Batch of min-max normalized log-degree scores, canonical edge order. If all
// edge scores are equal (regular graphs, stars) the normalization is
// degenerate and every score is defined as 1: with no core/periphery
// distinction, everything is retained.
std::vector<double> centrality_scores(const Graph& g);
double centrality_score(const Graph& g, NodeId i, NodeId j);

// Independent Bernoulli keep/drop per edge, consuming the RNG in canonical
// sorted edge order. Nodes and labels are preserved; the result's edge set is
// always a subset of g's.
Graph apply_noise(const Graph& g, const RetainProbabilities& probs,
                  std::uint64_t seed);

// Sum of the retain probabilities: the expected observed edge count.
double expected_retained(const RetainProbabilities& probs);

}  // namespace biasnet
