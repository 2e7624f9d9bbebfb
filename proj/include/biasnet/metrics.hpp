#pragma once

#include <cstdint>

#include "biasnet/graph.hpp"

namespace biasnet {

// Summary statistics of the fixed label partition; no optimization involved.
struct PartitionReport {
  NodeId nodes = 0;
  std::int64_t edges = 0;
  double minority_fraction = 0.0;
  double modularity = 0.0;
  double assortativity = 0.0;
  bool assortativity_degenerate = false;  // all endpoints in one group
};

// Q = sum_c (e_cc - a_c^2), where e_cc is the fraction of edges inside group c
// and a_c the fraction of edge endpoints in group c (each undirected edge
// contributes two endpoints). Requires at least one edge.
double label_modularity(const Graph& g);

// Newman's categorical assortativity r = (sum_c e_cc - sum_c a_c^2) /
// (1 - sum_c a_c^2); -1 for fully cross-group graphs, +1 for fully
// within-group ones. A single-group edge set makes the denominator zero; the
// coefficient is then defined as 0 and flagged via `degenerate`.
double attribute_assortativity(const Graph& g, bool* degenerate = nullptr);

// |E_observed| / |E_latent|; the observed edge set must be a subset of the
// latent one, anything else signals a pipeline bug.
double edge_fraction_retained(const Graph& latent, const Graph& observed);

PartitionReport partition_report(const Graph& g);

}  // namespace biasnet
