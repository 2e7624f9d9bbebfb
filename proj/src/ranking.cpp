#include "biasnet/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "biasnet/rng.hpp"

namespace biasnet {

RankingResult degree_ranking(const Graph& g, std::uint64_t tie_seed) {
  RankingResult r;
  r.tie_seed = tie_seed;
  r.order.resize(static_cast<std::size_t>(g.node_count()));
  std::iota(r.order.begin(), r.order.end(), NodeId{0});
  Rng rng(tie_seed);
  fisher_yates_shuffle(r.order, rng);
  std::stable_sort(r.order.begin(), r.order.end(),
                   [&g](NodeId a, NodeId b) { return g.degree(a) > g.degree(b); });
  return r;
}

double topk_minority_fraction(const RankingResult& r,
                              std::span<const std::uint8_t> labels, NodeId k) {
  const auto n = static_cast<NodeId>(r.order.size());
  if (k < 1 || k > n) {
    throw std::out_of_range("k=" + std::to_string(k) + " outside [1, " +
                            std::to_string(n) + "]");
  }
  std::int64_t minority = 0;
  for (NodeId rank = 0; rank < k; ++rank) {
    minority += labels[static_cast<std::size_t>(r.order[rank])];
  }
  return static_cast<double>(minority) / static_cast<double>(k);
}

std::vector<std::pair<NodeId, double>> minority_fraction_curve(
    const RankingResult& r, std::span<const std::uint8_t> labels, NodeId k_min,
    NodeId k_max) {
  const auto n = static_cast<NodeId>(r.order.size());
  if (k_min <= 10 || k_min > k_max || k_max > n) {
    throw std::out_of_range("need 10 < k_min <= k_max <= n, got k_min=" +
                            std::to_string(k_min) +
                            " k_max=" + std::to_string(k_max));
  }
  std::vector<std::pair<NodeId, double>> curve;
  curve.reserve(static_cast<std::size_t>(k_max - k_min + 1));
  std::int64_t minority = 0;
  for (NodeId rank = 0; rank < k_max; ++rank) {
    minority += labels[static_cast<std::size_t>(r.order[rank])];
    const NodeId k = rank + 1;
    if (k >= k_min) {
      curve.emplace_back(k, static_cast<double>(minority) /
                                static_cast<double>(k));
    }
  }
  return curve;
}

NodeId default_top_k(NodeId n) {
  return std::max<NodeId>(1, static_cast<NodeId>(std::llround(0.01 * n)));
}

double CcdfCurve::at(int group, std::int64_t x) const {
  if (!group_present[static_cast<std::size_t>(group)]) {
    throw std::out_of_range("group " + std::to_string(group) + " has no curve");
  }
  const auto& v = values[static_cast<std::size_t>(group)];
  if (x < 0) return 1.0;
  if (x >= static_cast<std::int64_t>(v.size())) return 0.0;
  return v[static_cast<std::size_t>(x)];
}

CcdfCurve group_ccdf(const Graph& g) {
  const NodeId n = g.node_count();
  NodeId max_degree = 0;
  for (NodeId i = 0; i < n; ++i) {
    max_degree = std::max(max_degree, g.degree(i));
  }

  CcdfCurve curve;
  for (int group = 0; group < 2; ++group) {
    // counts[x] = number of group nodes with degree exactly x
    std::vector<std::int64_t> counts(static_cast<std::size_t>(max_degree) + 1,
                                     0);
    std::int64_t total = 0;
    for (NodeId i = 0; i < n; ++i) {
      if (g.label(i) != group) continue;
      ++counts[static_cast<std::size_t>(g.degree(i))];
      ++total;
    }
    if (total == 0) {
      curve.group_present[static_cast<std::size_t>(group)] = false;
      continue;
    }
    curve.group_present[static_cast<std::size_t>(group)] = true;
    auto& v = curve.values[static_cast<std::size_t>(group)];
    v.resize(static_cast<std::size_t>(max_degree) + 1);
    std::int64_t above = total;
    for (NodeId x = 0; x <= max_degree; ++x) {
      above -= counts[static_cast<std::size_t>(x)];
      v[static_cast<std::size_t>(x)] =
          static_cast<double>(above) / static_cast<double>(total);
    }
  }
  return curve;
}

}  // namespace biasnet
