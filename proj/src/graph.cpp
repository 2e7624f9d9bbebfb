#include "biasnet/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace biasnet {

namespace {

std::string pair_str(const Edge& e) {
  return "(" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")";
}

}  // namespace

Graph Graph::from_edges(NodeId n, std::vector<Edge> edges,
                        std::vector<std::uint8_t> labels) {
  if (n < 0) {
    throw std::invalid_argument("node count must be non-negative");
  }
  if (static_cast<NodeId>(labels.size()) != n) {
    throw std::invalid_argument("label list has " +
                                std::to_string(labels.size()) +
                                " entries for " + std::to_string(n) +
                                " nodes");
  }
  for (NodeId i = 0; i < n; ++i) {
    if (labels[i] > 1) {
      throw std::invalid_argument("label " + std::to_string(int(labels[i])) +
                                  " of node " + std::to_string(i) +
                                  " is not binary");
    }
  }
  for (auto& e : edges) {
    if (e.first == e.second) {
      throw std::invalid_argument("self-loop " + pair_str(e));
    }
    if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n) {
      throw std::invalid_argument("edge " + pair_str(e) +
                                  " references a node outside [0, " +
                                  std::to_string(n) + ")");
    }
    e = make_edge(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  const auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw std::invalid_argument("duplicate edge " + pair_str(*dup));
  }

  Graph g;
  g.n_ = n;
  g.labels_ = std::move(labels);
  g.edges_ = std::move(edges);

  std::vector<std::int64_t> deg(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [i, j] : g.edges_) {
    ++deg[static_cast<std::size_t>(i) + 1];
    ++deg[static_cast<std::size_t>(j) + 1];
  }
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId i = 0; i < n; ++i) {
    g.offsets_[static_cast<std::size_t>(i) + 1] =
        g.offsets_[i] + deg[static_cast<std::size_t>(i) + 1];
  }
  g.adjacency_.resize(static_cast<std::size_t>(g.offsets_[n]));
  std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [i, j] : g.edges_) {
    g.adjacency_[static_cast<std::size_t>(cursor[i]++)] = j;
    g.adjacency_[static_cast<std::size_t>(cursor[j]++)] = i;
  }
  for (NodeId i = 0; i < n; ++i) {
    std::sort(g.adjacency_.begin() + g.offsets_[i],
              g.adjacency_.begin() + g.offsets_[i + 1]);
  }
  return g;
}

void Graph::check_node(NodeId i) const {
  if (i < 0 || i >= n_) {
    throw std::out_of_range("node " + std::to_string(i) + " outside [0, " +
                            std::to_string(n_) + ")");
  }
}

NodeId Graph::degree(NodeId i) const {
  check_node(i);
  return static_cast<NodeId>(offsets_[i + 1] - offsets_[i]);
}

std::span<const NodeId> Graph::neighbors(NodeId i) const {
  check_node(i);
  return {adjacency_.data() + offsets_[i],
          static_cast<std::size_t>(offsets_[i + 1] - offsets_[i])};
}

bool Graph::has_edge(NodeId i, NodeId j) const {
  check_node(i);
  check_node(j);
  if (i == j) return false;
  const auto row = neighbors(degree(i) <= degree(j) ? i : j);
  const NodeId other = degree(i) <= degree(j) ? j : i;
  return std::binary_search(row.begin(), row.end(), other);
}

std::uint8_t Graph::label(NodeId i) const {
  check_node(i);
  return labels_[static_cast<std::size_t>(i)];
}

GroupStats Graph::group_stats() const {
  GroupStats s;
  for (NodeId i = 0; i < n_; ++i) {
    ++s.group_counts[labels_[static_cast<std::size_t>(i)]];
  }
  for (const auto& [i, j] : edges_) {
    const int a = labels_[static_cast<std::size_t>(i)];
    const int b = labels_[static_cast<std::size_t>(j)];
    if (a != b) {
      ++s.inter_edges;
    } else if (a == 0) {
      ++s.intra_majority_edges;
    } else {
      ++s.intra_minority_edges;
    }
  }
  s.minority_fraction =
      n_ == 0 ? 0.0
              : static_cast<double>(s.group_counts[1]) / static_cast<double>(n_);
  return s;
}

}  // namespace biasnet
