#include <gtest/gtest.h>

#include <random>

#include "aicnet/metrics.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace aicnet;
using namespace testing_support;

namespace {

void expect_same(const std::optional<double>& a, const std::optional<double>& b, double tol,
                 const std::string& what) {
  ASSERT_EQ(a.has_value(), b.has_value()) << what;
  if (a) {
    EXPECT_NEAR(*a, *b, tol) << what;
  }
}

WeightedGraph random_graph(std::mt19937_64& rng, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> size(1, max_n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = size(rng);
  const double p = unit(rng);
  WeightedGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node(node_name(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (unit(rng) < p) g.set_weight(node_name(i), node_name(j), 0.1 + 4.0 * unit(rng));
  return g;
}

// Krackhardt kite plus a disjoint path of three.
WeightedGraph kite_and_path() {
  WeightedGraph g;
  const std::vector<std::pair<const char*, const char*>> edges = {
      {"k0", "k1"}, {"k0", "k2"}, {"k0", "k3"}, {"k0", "k5"}, {"k1", "k3"}, {"k1", "k4"}, {"k1", "k6"},
      {"k2", "k3"}, {"k2", "k5"}, {"k3", "k4"}, {"k3", "k5"}, {"k3", "k6"}, {"k4", "k6"}, {"k5", "k6"},
      {"k5", "k7"}, {"k6", "k7"}, {"k7", "k8"}, {"k8", "k9"}, {"p0", "p1"}, {"p1", "p2"}};
  for (auto [u, v] : edges) g.set_weight(u, v, 1.0);
  return g;
}

}  // namespace

TEST(Transitivity, Examples) {
  EXPECT_EQ(transitivity(complete_graph(3)), 1.0);
  EXPECT_EQ(transitivity(path_graph(3)), 0.0);
  auto k4 = from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  EXPECT_DOUBLE_EQ(*transitivity(k4), 0.75);
  EXPECT_FALSE(transitivity(path_graph(2)));
  EXPECT_FALSE(transitivity(from_edges(3, {})));
}

TEST(DegreeCentralization, Examples) {
  EXPECT_EQ(degree_centralization(star_graph(4)), 1.0);
  EXPECT_EQ(degree_centralization(cycle_graph(5)), 0.0);
  EXPECT_NEAR(*degree_centralization(path_graph(4)), 1.0 / 3.0, 1e-15);
  EXPECT_FALSE(degree_centralization(path_graph(2)));
  // Isolates do not dilute it.
  auto s = star_graph(4);
  s.add_node("zz");
  EXPECT_EQ(degree_centralization(s), 1.0);
}

TEST(Closeness, Examples) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto kn = complete_graph(n);
    for (const auto& v : kn.nodes()) EXPECT_EQ(closeness(kn, v), 1.0);
  }
  const auto p3 = path_graph(3);
  EXPECT_EQ(closeness(p3, "n1"), 1.0);
  EXPECT_NEAR(*closeness(p3, "n0"), 2.0 / 3.0, 1e-15);
  auto g = p3;
  g.add_node("iso");
  EXPECT_FALSE(closeness(g, "iso"));
  EXPECT_THROW(closeness(g, "nope"), Error);
}

TEST(Betweenness, Examples) {
  const auto p4 = path_graph(4);
  EXPECT_NEAR(*betweenness(p4, "n1"), 2.0 / 3.0, 1e-15);
  EXPECT_EQ(betweenness(p4, "n0"), 0.0);
  for (std::size_t leaves = 2; leaves <= 7; ++leaves) {
    EXPECT_EQ(betweenness(star_graph(leaves), "n0"), 1.0);
    EXPECT_EQ(betweenness(star_graph(leaves), "n1"), 0.0);
  }
  EXPECT_FALSE(betweenness(path_graph(2), "n0"));
}

TEST(Metrics, NetworkxReference) {
  const auto g = kite_and_path();
  EXPECT_NEAR(*transitivity(g), 0.5689655172413793, 1e-12);
  EXPECT_NEAR(*degree_centralization(g), 0.2878787878787879, 1e-12);
  const std::map<Id, double> close = {
      {"k0", 0.5294117647058824}, {"k1", 0.5294117647058824}, {"k2", 0.5}, {"k3", 0.6},
      {"k4", 0.5}, {"k5", 0.6428571428571429}, {"k6", 0.6428571428571429}, {"k7", 0.6},
      {"k8", 0.42857142857142855}, {"k9", 0.3103448275862069}, {"p0", 0.6666666666666666},
      {"p1", 1.0}, {"p2", 0.6666666666666666}};
  const std::map<Id, double> btw = {
      {"k0", 0.012626262626262626}, {"k1", 0.012626262626262626}, {"k2", 0.0}, {"k3", 0.055555555555555546},
      {"k4", 0.0}, {"k5", 0.12626262626262627}, {"k6", 0.12626262626262627}, {"k7", 0.21212121212121213},
      {"k8", 0.12121212121212122}, {"k9", 0.0}, {"p0", 0.0}, {"p1", 0.015151515151515152}, {"p2", 0.0}};
  const auto c = closeness_all(g);
  const auto b = betweenness_all(g);
  for (const auto& [v, x] : close) EXPECT_NEAR(*c.at(v), x, 1e-12) << v;
  for (const auto& [v, x] : btw) EXPECT_NEAR(*b.at(v), x, 1e-12) << v;
}

TEST(Metrics, MatchBruteForceOracle) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_graph(rng, 8);
    const std::string tag = "trial " + std::to_string(trial);
    expect_same(transitivity(g), oracle::transitivity(g), 1e-9, tag + " transitivity");
    expect_same(degree_centralization(g), oracle::degree_centralization(g), 1e-9, tag + " centralization");
    const auto oc = oracle::closeness(g);
    const auto ob = oracle::betweenness(g);
    const auto bc = betweenness_all(g);
    for (const auto& v : g.nodes()) {
      expect_same(closeness(g, v), oc.at(v), 1e-9, tag + " closeness " + v);
      expect_same(bc.at(v), ob.at(v), 1e-9, tag + " betweenness " + v);
    }
  }
}

TEST(Metrics, IgnoreEdgeWeights) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> w(0.01, 10.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_graph(rng, 9);
    WeightedGraph h;
    for (const auto& v : g.nodes()) h.add_node(v);
    for (const auto& [k, x] : g.edges()) h.set_weight(k.first, k.second, w(rng));
    EXPECT_EQ(transitivity(g), transitivity(h));
    EXPECT_EQ(degree_centralization(g), degree_centralization(h));
    EXPECT_EQ(closeness_all(g), closeness_all(h));
    EXPECT_EQ(betweenness_all(g), betweenness_all(h));
  }
}

TEST(Metrics, InverseWeightPaths) {
  // Triangle a-b-c where the direct a-c edge is weak: with lengths 1/w the
  // route through b is shorter (0.5 + 0.5 < 1/0.5).
  WeightedGraph g;
  g.set_weight("a", "b", 2.0);
  g.set_weight("b", "c", 2.0);
  g.set_weight("a", "c", 0.5);
  EXPECT_EQ(betweenness(g, "b"), 0.0);
  EXPECT_EQ(betweenness(g, "b", PathMode::inverse_weight), 1.0);
  EXPECT_NEAR(*closeness(g, "a", PathMode::inverse_weight), 2.0 / (0.5 + 1.0), 1e-12);
  EXPECT_EQ(closeness(g, "a"), 1.0);
}

TEST(Metrics, InverseWeightTies) {
  // Two equal-length routes a-b-d and a-c-d that only tie up to rounding.
  WeightedGraph g;
  g.set_weight("a", "b", 1.0 / 0.1);
  g.set_weight("b", "d", 1.0 / 0.2);
  g.set_weight("a", "c", 1.0 / 0.15);
  g.set_weight("c", "d", 1.0 / 0.15);
  const auto b = betweenness_all(g, PathMode::inverse_weight);
  EXPECT_NEAR(*b.at("b"), 0.5 / 3.0, 1e-12);
  EXPECT_NEAR(*b.at("c"), 0.5 / 3.0, 1e-12);
  EXPECT_NEAR(*b.at("a"), 1.0 / 3.0, 1e-12);
}

TEST(NodeReport, NullsAndComposition) {
  const auto an = complete_graph(3);
  auto in = star_graph(3);
  auto cn = path_graph(3);
  const std::set<Id> roster = {"n0", "n1", "n2", "n3", "ghost"};
  const auto rows = node_report(an, in, cn, roster);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], (NodeMetricsRow{"ghost", std::nullopt, std::nullopt, std::nullopt}));
  for (const auto& r : rows) {
    if (r.author_id == "ghost") continue;
    EXPECT_EQ(r.in_betweenness, betweenness(in, r.author_id));
    if (an.has_node(r.author_id)) {
      EXPECT_EQ(r.an_closeness, closeness(an, r.author_id));
    } else {
      EXPECT_FALSE(r.an_closeness);
    }
  }
  WeightedGraph empty;
  for (const auto& id : roster) empty.add_node(id);
  for (const auto& r : node_report(empty, empty, empty, roster))
    EXPECT_EQ(r, (NodeMetricsRow{r.author_id, std::nullopt, std::nullopt, std::nullopt}));
}

TEST(NetworkReport, ComposedFixture) {
  const std::vector<ReadingNetworks> readings = {
      {"r2", complete_graph(3), star_graph(3), path_graph(3)},
      {"r1", complete_graph(3), star_graph(3), from_edges(3, {})}};
  const auto rows = network_report(readings);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].reading_id, "r1");
  EXPECT_FALSE(rows[0].cn_transitivity);
  EXPECT_EQ(rows[1], (NetworkMetricsRow{"r2", 1.0, 1.0, 0.0}));
}

TEST(TriadCounts, KFour) {
  const auto t = triad_counts(complete_graph(4));
  EXPECT_EQ(t.triangles, 4u);
  EXPECT_EQ(t.connected_triples, 12u);
}
