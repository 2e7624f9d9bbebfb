#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace biasnet {

using NodeId = std::int32_t;

// Canonical form: first < second.
using Edge = std::pair<NodeId, NodeId>;

inline Edge make_edge(NodeId i, NodeId j) {
  return i < j ? Edge{i, j} : Edge{j, i};
}

struct GroupStats {
  std::array<std::int64_t, 2> group_counts{0, 0};  // [majority, minority]
  std::int64_t intra_majority_edges = 0;
  std::int64_t intra_minority_edges = 0;
  std::int64_t inter_edges = 0;
  double minority_fraction = 0.0;
};

// Simple undirected graph over dense node ids 0..n-1 with binary group labels
// (0 = majority, 1 = minority). Immutable after construction; safe to share
// across threads. Edges are kept in canonical sorted order and adjacency in
// CSR form, so degree and neighbor queries are O(1)/O(deg).
class Graph {
 public:
  Graph() = default;  // the empty graph

  // Validates and canonicalizes the edge list. Self-loops, duplicate pairs
  // (in either orientation), out-of-range endpoints, a label list of the
  // wrong length, and non-binary labels are all rejected.
  static Graph from_edges(NodeId n, std::vector<Edge> edges,
                          std::vector<std::uint8_t> labels);

  NodeId node_count() const noexcept { return n_; }
  std::int64_t edge_count() const noexcept {
    return static_cast<std::int64_t>(edges_.size());
  }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  NodeId degree(NodeId i) const;
  std::span<const NodeId> neighbors(NodeId i) const;  // sorted, excludes i
  bool has_edge(NodeId i, NodeId j) const;

  std::uint8_t label(NodeId i) const;
  const std::vector<std::uint8_t>& labels() const noexcept { return labels_; }

  GroupStats group_stats() const;

 private:
  void check_node(NodeId i) const;

  NodeId n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> offsets_;  // size n_+1
  std::vector<NodeId> adjacency_;
  std::vector<std::uint8_t> labels_;
};

}  // namespace biasnet
