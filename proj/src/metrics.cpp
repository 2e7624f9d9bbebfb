#include "biasnet/metrics.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace biasnet {

namespace {

struct MixingSums {
  std::array<double, 2> e_cc{0.0, 0.0};  // fraction of edges inside group c
  std::array<double, 2> a_c{0.0, 0.0};   // fraction of endpoints in group c
};

MixingSums mixing_sums(const Graph& g) {
  if (g.edge_count() == 0) {
    throw std::invalid_argument("label partition metrics need at least one edge");
  }
  std::array<std::int64_t, 2> inside{0, 0};
  std::array<std::int64_t, 2> ends{0, 0};
  for (const auto& [i, j] : g.edges()) {
    const int a = g.label(i);
    const int b = g.label(j);
    ++ends[a];
    ++ends[b];
    if (a == b) ++inside[a];
  }
  const auto m = static_cast<double>(g.edge_count());
  MixingSums s;
  for (int c = 0; c < 2; ++c) {
    s.e_cc[c] = static_cast<double>(inside[c]) / m;
    s.a_c[c] = static_cast<double>(ends[c]) / (2.0 * m);
  }
  return s;
}

}  // namespace

double label_modularity(const Graph& g) {
  const auto s = mixing_sums(g);
  double q = 0.0;
  for (int c = 0; c < 2; ++c) {
    q += s.e_cc[c] - s.a_c[c] * s.a_c[c];
  }
  return q;
}

double attribute_assortativity(const Graph& g, bool* degenerate) {
  const auto s = mixing_sums(g);
  const double sum_e = s.e_cc[0] + s.e_cc[1];
  const double sum_a2 = s.a_c[0] * s.a_c[0] + s.a_c[1] * s.a_c[1];
  const double denom = 1.0 - sum_a2;
  if (degenerate != nullptr) *degenerate = (denom == 0.0);
  if (denom == 0.0) return 0.0;
  return (sum_e - sum_a2) / denom;
}

double edge_fraction_retained(const Graph& latent, const Graph& observed) {
  if (!std::includes(latent.edges().begin(), latent.edges().end(),
                     observed.edges().begin(), observed.edges().end())) {
    throw std::invalid_argument(
        "observed edge set is not a subset of the latent edge set");
  }
  if (latent.edge_count() == 0) return 1.0;
  return static_cast<double>(observed.edge_count()) /
         static_cast<double>(latent.edge_count());
}

PartitionReport partition_report(const Graph& g) {
  PartitionReport r;
  r.nodes = g.node_count();
  r.edges = g.edge_count();
  r.minority_fraction = g.group_stats().minority_fraction;
  r.modularity = label_modularity(g);
  r.assortativity = attribute_assortativity(g, &r.assortativity_degenerate);
  return r;
}

}  // namespace biasnet
