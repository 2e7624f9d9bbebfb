#include "biasnet/netgen.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "biasnet/rng.hpp"

namespace biasnet {

namespace {

void validate(const GenParams& p) {
  if (p.m < 1 || p.n <= p.m) {
    throw std::invalid_argument("need n > m >= 1, got n=" +
                                std::to_string(p.n) +
                                " m=" + std::to_string(p.m));
  }
  if (!(p.minority_fraction >= 0.0 && p.minority_fraction <= 1.0)) {
    throw std::invalid_argument("minority fraction must lie in [0,1]");
  }
  if (!(p.homophily >= 0.0 && p.homophily <= 1.0)) {
    throw std::invalid_argument("homophily must lie in [0,1]");
  }
}

}  // namespace

std::vector<std::uint8_t> label_assignment(NodeId n, double f,
                                           std::uint64_t seed) {
  if (n < 0 || !(f >= 0.0 && f <= 1.0)) {
    throw std::invalid_argument("label_assignment requires n >= 0 and f in [0,1]");
  }
  const auto minority = static_cast<NodeId>(std::llround(f * n));
  std::vector<std::uint8_t> labels(static_cast<std::size_t>(n), 0);
  for (NodeId i = 0; i < minority; ++i) labels[static_cast<std::size_t>(i)] = 1;
  Rng rng(seed);
  fisher_yates_shuffle(labels, rng);
  return labels;
}

Graph generate(const GenParams& params, GenReport* report) {
  validate(params);
  const NodeId n = params.n;
  const NodeId m = params.m;
  const double h = params.homophily;

  auto labels = label_assignment(n, params.minority_fraction, params.seed);
  Rng rng(mix_seed(params.seed, hash_tag("growth")));

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m) * (m + 1) / 2 +
                static_cast<std::size_t>(m) * (n - m - 1));
  std::vector<std::int64_t> degree(static_cast<std::size_t>(n), 0);

  // Seed clique on nodes 0..m, so every candidate has positive degree from
  // the first growth step on.
  for (NodeId i = 0; i <= m; ++i) {
    for (NodeId j = i + 1; j <= m; ++j) {
      edges.emplace_back(i, j);
    }
    degree[static_cast<std::size_t>(i)] = m;
  }

  // Sum of candidate degrees per label, for O(1) total-weight computation.
  std::array<std::int64_t, 2> deg_sum{0, 0};
  for (NodeId i = 0; i <= m; ++i) {
    deg_sum[labels[static_cast<std::size_t>(i)]] += m;
  }

  std::int64_t fallbacks = 0;
  std::vector<NodeId> picked(static_cast<std::size_t>(m));
  std::vector<std::uint8_t> is_picked(static_cast<std::size_t>(n), 0);

  for (NodeId u = m + 1; u < n; ++u) {
    const int group_u = labels[static_cast<std::size_t>(u)];
    const double w_of[2] = {group_u == 0 ? h : 1.0 - h,
                            group_u == 1 ? h : 1.0 - h};
    std::array<std::int64_t, 2> picked_deg{0, 0};

    for (NodeId pick = 0; pick < m; ++pick) {
      const double total =
          w_of[0] * static_cast<double>(deg_sum[0] - picked_deg[0]) +
          w_of[1] * static_cast<double>(deg_sum[1] - picked_deg[1]);
      NodeId target = -1;
      if (total <= 0.0) {
        // All remaining candidates have zero weight; fall back to a uniform
        // draw so generation cannot stall.
        ++fallbacks;
        std::uint64_t idx = rng.next_below(static_cast<std::uint64_t>(u - pick));
        for (NodeId t = 0; t < u; ++t) {
          if (is_picked[static_cast<std::size_t>(t)]) continue;
          if (idx == 0) {
            target = t;
            break;
          }
          --idx;
        }
      } else {
        const double x = rng.next_double() * total;
        double acc = 0.0;
        NodeId last_positive = -1;
        for (NodeId t = 0; t < u; ++t) {
          if (is_picked[static_cast<std::size_t>(t)]) continue;
          const double w = w_of[labels[static_cast<std::size_t>(t)]] *
                           static_cast<double>(degree[static_cast<std::size_t>(t)]);
          if (w <= 0.0) continue;
          last_positive = t;
          acc += w;
          if (acc > x) {
            target = t;
            break;
          }
        }
        // Rounding guard: if acc never cleared x, take the last candidate
        // that carried weight.
        if (target < 0) target = last_positive;
      }
      picked[static_cast<std::size_t>(pick)] = target;
      is_picked[static_cast<std::size_t>(target)] = 1;
      picked_deg[labels[static_cast<std::size_t>(target)]] +=
          degree[static_cast<std::size_t>(target)];
    }

    for (NodeId pick = 0; pick < m; ++pick) {
      const NodeId t = picked[static_cast<std::size_t>(pick)];
      edges.emplace_back(t, u);
      is_picked[static_cast<std::size_t>(t)] = 0;
      ++degree[static_cast<std::size_t>(t)];
      ++deg_sum[labels[static_cast<std::size_t>(t)]];
    }
    degree[static_cast<std::size_t>(u)] = m;
    deg_sum[group_u] += m;
  }

  if (report != nullptr) {
    report->zero_weight_fallbacks = fallbacks;
  }
  return Graph::from_edges(n, std::move(edges), std::move(labels));
}

}  // namespace biasnet
