#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "biasnet/graph.hpp"

namespace biasnet {

// Nodes sorted by degree, highest first; equal degrees fall back to the order
// of a seeded random permutation. The tie seed is kept for reproducibility.
struct RankingResult {
  std::vector<NodeId> order;  // order[0] = top-ranked node
  std::uint64_t tie_seed = 0;
};

RankingResult degree_ranking(const Graph& g, std::uint64_t tie_seed);

// Share of minority nodes among the first k ranked nodes, 1 <= k <= n.
double topk_minority_fraction(const RankingResult& r,
                              std::span<const std::uint8_t> labels, NodeId k);

// Fraction evaluated at every k in [k_min, k_max]. The top of the ranking is
// noisy under random tie-breaking, so curves conventionally start above
// k = 10.
inline constexpr NodeId kDefaultCurveStart = 11;
std::vector<std::pair<NodeId, double>> minority_fraction_curve(
    const RankingResult& r, std::span<const std::uint8_t> labels, NodeId k_min,
    NodeId k_max);

// k for a "top 1%" ranking: max(1, round(0.01 * n)).
NodeId default_top_k(NodeId n);

// Per-group complementary cumulative degree distribution over integer
// thresholds 0..max_degree. A group with no nodes has no curve; its
// group_present flag is false.
struct CcdfCurve {
  std::array<std::vector<double>, 2> values;  // values[g][x] = P(degree > x)
  std::array<bool, 2> group_present{false, false};

  // Curve value with the conventional tails: 1 below zero, 0 past the end.
  double at(int group, std::int64_t x) const;
};

CcdfCurve group_ccdf(const Graph& g);

}  // namespace biasnet
