#include "biasnet/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "biasnet/rng.hpp"

namespace biasnet {

namespace {

void check_probability(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0,1], got " +
                                std::to_string(v));
  }
}

void check_alpha(double alpha) {
  if (!(alpha >= 0.0)) {
    throw std::invalid_argument("alpha must be non-negative, got " +
                                std::to_string(alpha));
  }
}

// base^alpha with 0^0 = 1, so alpha = 0 retains every edge.
double retain_pow(double base, double alpha) {
  if (alpha == 0.0) return 1.0;
  return std::pow(base, alpha);
}

void check_is_edge(const Graph& g, NodeId i, NodeId j) {
  if (!g.has_edge(i, j)) {
    throw std::invalid_argument("(" + std::to_string(i) + ", " +
                                std::to_string(j) + ") is not an edge");
  }
}

// |A n B| for the augmented neighborhoods A = {a} u N(a), B = {b} u N(b).
// Neighbor rows are sorted and never contain the node itself, so the self
// elements are merged in on the fly.
std::int64_t augmented_common(const Graph& g, NodeId a, NodeId b) {
  const auto na = g.neighbors(a);
  const auto nb = g.neighbors(b);
  std::int64_t common = 0;
  std::size_t ia = 0, ib = 0;
  bool self_a = true, self_b = true;  // a / b still pending insertion
  NodeId va, vb;
  while (true) {
    if (self_a && (ia == na.size() || a < na[ia])) {
      va = a;
    } else if (ia < na.size()) {
      va = na[ia];
    } else {
      break;
    }
    if (self_b && (ib == nb.size() || b < nb[ib])) {
      vb = b;
    } else if (ib < nb.size()) {
      vb = nb[ib];
    } else {
      break;
    }
    if (va == vb) {
      ++common;
    }
    if (va <= vb) {
      if (va == a && self_a) self_a = false; else ++ia;
    }
    if (vb <= va) {
      if (vb == b && self_b) self_b = false; else ++ib;
    }
  }
  return common;
}

}  // namespace

AttributeNoise omega_preset(OmegaKind kind, double rho, double other) {
  check_probability(rho, "rho");
  check_probability(other, "other");
  switch (kind) {
    case OmegaKind::Intra:
      return AttributeNoise{{{rho, other}, {other, rho}}};
    case OmegaKind::Inter:
      return AttributeNoise{{{other, rho}, {rho, other}}};
    case OmegaKind::Majority:
      return AttributeNoise{{{rho, rho}, {rho, other}}};
    case OmegaKind::Minority:
      return AttributeNoise{{{other, rho}, {rho, rho}}};
  }
  throw std::invalid_argument("unknown omega preset");
}

double jaccard_similarity(const Graph& g, NodeId i, NodeId j) {
  check_is_edge(g, i, j);
  const std::int64_t common = augmented_common(g, i, j);
  const std::int64_t size_union =
      (g.degree(i) + 1) + (g.degree(j) + 1) - common;
  return static_cast<double>(common) / static_cast<double>(size_union);
}

std::vector<double> centrality_scores(const Graph& g) {
  const auto& edges = g.edges();
  std::vector<double> scores(edges.size());
  double lo = 0.0, hi = 0.0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const double s = std::log(static_cast<double>(g.degree(edges[e].first))) +
                     std::log(static_cast<double>(g.degree(edges[e].second)));
    scores[e] = s;
    if (e == 0 || s < lo) lo = s;
    if (e == 0 || s > hi) hi = s;
  }
  if (hi == lo) {
    // No core/periphery distinction; retain everything.
    std::fill(scores.begin(), scores.end(), 1.0);
    return scores;
  }
  for (double& s : scores) {
    s = (s - lo) / (hi - lo);
  }
  return scores;
}

double centrality_score(const Graph& g, NodeId i, NodeId j) {
  check_is_edge(g, i, j);
  const auto& edges = g.edges();
  const auto it =
      std::lower_bound(edges.begin(), edges.end(), make_edge(i, j));
  return centrality_scores(g)[static_cast<std::size_t>(it - edges.begin())];
}

RetainProbabilities retain_probs(const Graph& g, const NoiseSpec& spec) {
  RetainProbabilities rp;
  rp.edges = g.edges();
  rp.probs.resize(rp.edges.size());

  if (const auto* baseline = std::get_if<BaselineNoise>(&spec)) {
    check_probability(baseline->p, "p");
    std::fill(rp.probs.begin(), rp.probs.end(), baseline->p);
  } else if (const auto* attr = std::get_if<AttributeNoise>(&spec)) {
    const auto& omega = attr->omega;
    const std::size_t ell = omega.size();
    for (const auto& row : omega) {
      if (row.size() != ell) {
        throw std::invalid_argument("omega must be square");
      }
    }
    for (std::size_t r = 0; r < ell; ++r) {
      for (std::size_t c = 0; c < ell; ++c) {
        check_probability(omega[r][c], "omega entry");
        if (omega[r][c] != omega[c][r]) {
          throw std::invalid_argument("omega must be symmetric");
        }
      }
    }
    for (std::size_t e = 0; e < rp.edges.size(); ++e) {
      const std::size_t a = g.label(rp.edges[e].first);
      const std::size_t b = g.label(rp.edges[e].second);
      if (a >= ell || b >= ell) {
        throw std::invalid_argument("label " + std::to_string(std::max(a, b)) +
                                    " outside omega of size " +
                                    std::to_string(ell));
      }
      rp.probs[e] = omega[a][b];
    }
  } else if (const auto* jac = std::get_if<JaccardNoise>(&spec)) {
    check_alpha(jac->alpha);
    for (std::size_t e = 0; e < rp.edges.size(); ++e) {
      const auto [i, j] = rp.edges[e];
      const std::int64_t common = augmented_common(g, i, j);
      const std::int64_t size_union =
          (g.degree(i) + 1) + (g.degree(j) + 1) - common;
      const double sim =
          static_cast<double>(common) / static_cast<double>(size_union);
      rp.probs[e] = retain_pow(jac->inverse ? 1.0 - sim : sim, jac->alpha);
    }
  } else if (const auto* cen = std::get_if<CentralityNoise>(&spec)) {
    check_alpha(cen->alpha);
    const auto scores = centrality_scores(g);
    for (std::size_t e = 0; e < rp.edges.size(); ++e) {
      rp.probs[e] =
          retain_pow(cen->inverse ? 1.0 - scores[e] : scores[e], cen->alpha);
    }
  } else {
    throw std::logic_error("unhandled noise spec");
  }
  return rp;
}

Graph apply_noise(const Graph& g, const RetainProbabilities& probs,
                  std::uint64_t seed) {
  if (probs.edges != g.edges()) {
    throw std::invalid_argument(
        "retain probabilities were computed for a different edge set");
  }
  Rng rng(seed);
  std::vector<Edge> kept;
  kept.reserve(probs.edges.size());
  for (std::size_t e = 0; e < probs.edges.size(); ++e) {
    if (rng.next_double() < probs.probs[e]) {
      kept.push_back(probs.edges[e]);
    }
  }
  return Graph::from_edges(g.node_count(), std::move(kept), g.labels());
}

double expected_retained(const RetainProbabilities& probs) {
  return std::accumulate(probs.probs.begin(), probs.probs.end(), 0.0);
}

}  // namespace biasnet
