#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "biasnet/netgen.hpp"
#include "biasnet/noise.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace biasnet;
using testutil::make_graph;

TEST_CASE("jaccard similarity of augmented neighborhoods") {
  const Graph triangle = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(jaccard_similarity(triangle, 0, 1) == 1.0);
  CHECK(jaccard_similarity(triangle, 1, 2) == 1.0);

  const Graph path = testutil::path_graph(3);
  CHECK(jaccard_similarity(path, 0, 1) == doctest::Approx(2.0 / 3.0));

  const Graph pair = make_graph(2, {{0, 1}});
  CHECK(jaccard_similarity(pair, 0, 1) == 1.0);

  CHECK_THROWS_AS(jaccard_similarity(path, 0, 2), std::invalid_argument);
}

TEST_CASE("centrality scores: min-max normalized log-degree sums") {
  const Graph path = testutil::path_graph(4);  // degrees 1,2,2,1
  const auto scores = centrality_scores(path);  // edges (0,1),(1,2),(2,3)
  CHECK(scores == std::vector<double>{0.0, 1.0, 0.0});
  CHECK(centrality_score(path, 1, 2) == 1.0);
  CHECK(centrality_score(path, 3, 2) == 0.0);
  CHECK_THROWS_AS(centrality_score(path, 0, 3), std::invalid_argument);
}

TEST_CASE("degenerate centrality normalization retains everything") {
  const Graph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto star_scores = centrality_scores(star);
  CHECK(std::all_of(star_scores.begin(), star_scores.end(),
                    [](double d) { return d == 1.0; }));

  const auto cycle_scores = centrality_scores(testutil::cycle_graph(5));
  CHECK(std::all_of(cycle_scores.begin(), cycle_scores.end(),
                    [](double d) { return d == 1.0; }));
}

TEST_CASE("baseline noise is constant") {
  const Graph g = testutil::random_graph(20, 0.3, 0.5, 11);
  const auto rp = retain_probs(g, BaselineNoise{0.7});
  CHECK(rp.probs.size() == g.edges().size());
  CHECK(std::all_of(rp.probs.begin(), rp.probs.end(),
                    [](double p) { return p == 0.7; }));
  CHECK_THROWS_AS(retain_probs(g, BaselineNoise{1.2}), std::invalid_argument);
}

TEST_CASE("omega presets") {
  // 0-1 intra-majority, 2-3 intra-minority, 1-2 inter
  const Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}}, {0, 0, 1, 1});
  const auto prob_of = [&](const NoiseSpec& spec, Edge e) {
    const auto rp = retain_probs(g, spec);
    const auto it = std::find(rp.edges.begin(), rp.edges.end(), e);
    REQUIRE(it != rp.edges.end());
    return rp.probs[static_cast<std::size_t>(it - rp.edges.begin())];
  };

  const auto inter = omega_preset(OmegaKind::Inter, 0.3);
  CHECK(prob_of(inter, {1, 2}) == 0.3);
  CHECK(prob_of(inter, {0, 1}) == 0.9);
  CHECK(prob_of(inter, {2, 3}) == 0.9);

  const auto intra = omega_preset(OmegaKind::Intra, 0.3);
  CHECK(prob_of(intra, {0, 1}) == 0.3);
  CHECK(prob_of(intra, {2, 3}) == 0.3);
  CHECK(prob_of(intra, {1, 2}) == 0.9);

  const auto majority = omega_preset(OmegaKind::Majority, 0.2);
  CHECK(prob_of(majority, {0, 1}) == 0.2);
  CHECK(prob_of(majority, {1, 2}) == 0.2);
  CHECK(prob_of(majority, {2, 3}) == 0.9);

  const auto minority = omega_preset(OmegaKind::Minority, 0.2);
  CHECK(prob_of(minority, {0, 1}) == 0.9);
  CHECK(prob_of(minority, {1, 2}) == 0.2);
  CHECK(prob_of(minority, {2, 3}) == 0.2);

  // configurable non-targeted probability
  CHECK(prob_of(omega_preset(OmegaKind::Inter, 0.3, 0.75), {0, 1}) == 0.75);
}

TEST_CASE("attribute noise validation") {
  const Graph g = make_graph(2, {{0, 1}}, {0, 1});
  CHECK_THROWS_AS(retain_probs(g, AttributeNoise{{{0.5}}}),
                  std::invalid_argument);  // label 1 outside a 1x1 omega
  CHECK_THROWS_AS(retain_probs(g, AttributeNoise{{{0.5, 0.2}, {0.3, 0.5}}}),
                  std::invalid_argument);  // asymmetric
  CHECK_THROWS_AS(retain_probs(g, AttributeNoise{{{0.5, 1.2}, {1.2, 0.5}}}),
                  std::invalid_argument);  // out of [0,1]
  CHECK_THROWS_AS(retain_probs(g, AttributeNoise{{{0.5, 0.2}}}),
                  std::invalid_argument);  // ragged
  // a 1x1 omega is fine when only label 0 occurs
  const Graph single = make_graph(2, {{0, 1}}, {0, 0});
  CHECK(retain_probs(single, AttributeNoise{{{0.4}}}).probs[0] == 0.4);
}

TEST_CASE("alpha = 0 retains every edge in all structure families") {
  const Graph g = testutil::random_graph(24, 0.2, 0.3, 5);
  for (const NoiseSpec spec :
       {NoiseSpec{JaccardNoise{0.0, false}}, NoiseSpec{JaccardNoise{0.0, true}},
        NoiseSpec{CentralityNoise{0.0, false}},
        NoiseSpec{CentralityNoise{0.0, true}}}) {
    const auto rp = retain_probs(g, spec);
    CHECK(std::all_of(rp.probs.begin(), rp.probs.end(),
                      [](double p) { return p == 1.0; }));
  }
}

TEST_CASE("inverse duality") {
  const Graph g = testutil::random_graph(30, 0.25, 0.4, 21);
  const double alpha = 1.7;
  const auto inv_j = retain_probs(g, JaccardNoise{alpha, true});
  for (std::size_t e = 0; e < inv_j.edges.size(); ++e) {
    const double j =
        jaccard_similarity(g, inv_j.edges[e].first, inv_j.edges[e].second);
    CHECK(inv_j.probs[e] == doctest::Approx(std::pow(1.0 - j, alpha)));
  }
  const auto scores = centrality_scores(g);
  const auto inv_c = retain_probs(g, CentralityNoise{alpha, true});
  for (std::size_t e = 0; e < inv_c.edges.size(); ++e) {
    CHECK(inv_c.probs[e] == doctest::Approx(std::pow(1.0 - scores[e], alpha)));
  }
}

TEST_CASE("retain probability is non-increasing in alpha") {
  const Graph g = testutil::random_graph(30, 0.25, 0.4, 22);
  for (const bool inverse : {false, true}) {
    for (const auto& [lo, hi] :
         std::vector<std::pair<double, double>>{{0.0, 0.5}, {0.5, 2.0}, {2.0, 8.0}}) {
      const auto pj_lo = retain_probs(g, JaccardNoise{lo, inverse}).probs;
      const auto pj_hi = retain_probs(g, JaccardNoise{hi, inverse}).probs;
      const auto pc_lo = retain_probs(g, CentralityNoise{lo, inverse}).probs;
      const auto pc_hi = retain_probs(g, CentralityNoise{hi, inverse}).probs;
      for (std::size_t e = 0; e < pj_lo.size(); ++e) {
        CHECK(pj_hi[e] <= pj_lo[e]);
        CHECK(pc_hi[e] <= pc_lo[e]);
      }
    }
  }
}

TEST_CASE("expected retained count is non-decreasing in rho") {
  const Graph g = testutil::random_graph(40, 0.2, 0.3, 23);
  for (const OmegaKind kind : {OmegaKind::Intra, OmegaKind::Inter,
                               OmegaKind::Majority, OmegaKind::Minority}) {
    double prev = -1.0;
    for (double rho = 0.0; rho <= 1.0001; rho += 0.1) {
      const double expected =
          expected_retained(retain_probs(g, omega_preset(kind, std::min(rho, 1.0))));
      CHECK(expected >= prev);
      prev = expected;
    }
  }
}

TEST_CASE("attribute noise is label-permutation-consistent") {
  const Graph g = testutil::random_graph(25, 0.3, 0.4, 31);
  std::vector<std::uint8_t> flipped(g.labels());
  for (auto& l : flipped) l = static_cast<std::uint8_t>(1 - l);
  const Graph h = Graph::from_edges(g.node_count(), g.edges(), flipped);

  const AttributeNoise omega{{{0.2, 0.7}, {0.7, 0.4}}};
  const AttributeNoise permuted{{{0.4, 0.7}, {0.7, 0.2}}};
  CHECK(retain_probs(g, omega).probs == retain_probs(h, permuted).probs);
}

TEST_CASE("apply_noise endpoints") {
  const Graph g = testutil::random_graph(20, 0.3, 0.5, 41);
  RetainProbabilities all_one{g.edges(),
                              std::vector<double>(g.edges().size(), 1.0)};
  CHECK(apply_noise(g, all_one, 7).edges() == g.edges());

  RetainProbabilities all_zero{g.edges(),
                               std::vector<double>(g.edges().size(), 0.0)};
  CHECK(apply_noise(g, all_zero, 7).edge_count() == 0);
}

TEST_CASE("apply_noise rejects a mismatched probability domain") {
  const Graph g = testutil::random_graph(20, 0.3, 0.5, 42);
  const Graph other = testutil::random_graph(20, 0.3, 0.5, 43);
  const auto rp = retain_probs(other, BaselineNoise{0.5});
  CHECK_THROWS_AS(apply_noise(g, rp, 1), std::invalid_argument);
}

TEST_CASE("apply_noise is deterministic and omission-only") {
  const Graph g = generate({.n = 80, .m = 3, .minority_fraction = 0.2,
                            .homophily = 0.3, .seed = 17});
  for (const NoiseSpec spec :
       {NoiseSpec{BaselineNoise{0.6}},
        NoiseSpec{omega_preset(OmegaKind::Minority, 0.4)},
        NoiseSpec{JaccardNoise{1.5, false}},
        NoiseSpec{CentralityNoise{0.8, true}}}) {
    const auto rp = retain_probs(g, spec);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Graph a = apply_noise(g, rp, seed);
      const Graph b = apply_noise(g, rp, seed);
      CHECK(a.edges() == b.edges());
      CHECK(a.node_count() == g.node_count());
      CHECK(a.labels() == g.labels());
      CHECK(std::includes(g.edges().begin(), g.edges().end(),
                          a.edges().begin(), a.edges().end()));
    }
  }
}

TEST_CASE("retained count matches the binomial oracle") {
  // 1000 edges, p = 0.5: the mean over 200 seeds stays within three single
  // -draw standard deviations (~47) of 500.
  const Graph g = generate({.n = 203, .m = 5, .minority_fraction = 0.1,
                            .homophily = 0.5, .seed = 2});
  REQUIRE(g.edge_count() == 1000);
  const auto rp = retain_probs(g, BaselineNoise{0.5});
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    total += static_cast<double>(apply_noise(g, rp, seed).edge_count());
  }
  CHECK(std::abs(total / 200.0 - 500.0) < 3.0 * std::sqrt(1000 * 0.25));
}

TEST_CASE("per-edge retain frequency converges to the assigned probability") {
  const Graph g = testutil::path_graph(7, {0, 1, 0, 0, 1, 1, 0});
  const auto rp = retain_probs(g, omega_preset(OmegaKind::Minority, 0.35, 0.8));
  const int trials = 20000;
  std::vector<double> kept(rp.edges.size(), 0.0);
  for (std::uint64_t seed = 0; seed < trials; ++seed) {
    const Graph obs = apply_noise(g, rp, seed);
    for (const auto& e : obs.edges()) {
      const auto it = std::find(rp.edges.begin(), rp.edges.end(), e);
      kept[static_cast<std::size_t>(it - rp.edges.begin())] += 1.0;
    }
  }
  for (std::size_t e = 0; e < rp.edges.size(); ++e) {
    const double p = rp.probs[e];
    const double freq = kept[e] / trials;
    CHECK(std::abs(freq - p) < 4.0 * std::sqrt(p * (1 - p) / trials) + 1e-9);
  }
}

TEST_CASE("expected_retained") {
  const Graph ten = generate({.n = 11, .m = 1, .minority_fraction = 0.5,
                              .homophily = 0.5, .seed = 3});
  REQUIRE(ten.edge_count() == 10);
  CHECK(expected_retained(retain_probs(ten, BaselineNoise{0.9})) ==
        doctest::Approx(9.0));

  CHECK(expected_retained(RetainProbabilities{}) == 0.0);
  CHECK(expected_retained(RetainProbabilities{{{0, 1}, {1, 2}}, {0.2, 0.8}}) ==
        doctest::Approx(1.0));
}

TEST_CASE("retain_probs matches the brute-force oracle on random graphs") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Graph g = testutil::random_graph(14, 0.3, 0.4, 600 + seed);
    if (g.edge_count() == 0) continue;
    for (const NoiseSpec spec :
         {NoiseSpec{BaselineNoise{0.45}},
          NoiseSpec{omega_preset(OmegaKind::Intra, 0.3)},
          NoiseSpec{omega_preset(OmegaKind::Inter, 0.3)},
          NoiseSpec{omega_preset(OmegaKind::Majority, 0.3)},
          NoiseSpec{omega_preset(OmegaKind::Minority, 0.3)},
          NoiseSpec{JaccardNoise{1.7, false}}, NoiseSpec{JaccardNoise{1.7, true}},
          NoiseSpec{CentralityNoise{1.7, false}},
          NoiseSpec{CentralityNoise{1.7, true}}}) {
      const auto actual = retain_probs(g, spec);
      const auto expected = oracle::retain_probs(g, spec);
      REQUIRE(actual.probs.size() == expected.size());
      for (std::size_t e = 0; e < expected.size(); ++e) {
        CHECK(actual.probs[e] == doctest::Approx(expected[e]).epsilon(1e-12));
      }
    }
  }
}
