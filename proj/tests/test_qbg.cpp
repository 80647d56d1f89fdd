#include <gtest/gtest.h>

#include <random>

#include "common.hpp"
#include "newton_strata/qbg.hpp"

using namespace newton_strata;
using test_support::from_perm;

namespace {

Coweight to_coweight(const oracle::Vec& v) { return {v.begin(), v.end()}; }

// Every pair against the rebuilt graph: distance, uniqueness of the
// shortest-path weight, and l(v) - l(u) = d(u, v) - <2rho, wt(u => v)>.
void check_all_pairs(int rank) {
  const int n = rank + 1;
  const QuantumBruhatGraph graph(CartanData::type_a(rank));
  const oracle::Qbg reference(n);
  ASSERT_EQ(graph.size(), reference.vertices.size());
  for (std::size_t a = 0; a < reference.vertices.size(); ++a) {
    const auto paths = reference.shortest_paths(a);
    const auto u = from_perm(reference.vertices[a]);
    for (std::size_t b = 0; b < reference.vertices.size(); ++b) {
      const auto v = from_perm(reference.vertices[b]);
      ASSERT_GE(paths.dist[b], 0);
      ASSERT_EQ(paths.weights[b].size(), 1u) << "shortest paths of different weight";
      const oracle::Vec& weight = *paths.weights[b].begin();
      EXPECT_EQ(graph.distance(u, v), paths.dist[b]);
      EXPECT_EQ(graph.min_path_weight(u, v), to_coweight(weight));
      EXPECT_EQ(v.length() - u.length(), paths.dist[b] - oracle::pair_two_rho(weight));
    }
  }
}

}  // namespace

TEST(Qbg, A1) {
  const QuantumBruhatGraph graph(CartanData::type_a(1));
  const auto e = WeylElement::identity(2);
  const auto s = WeylElement::simple_reflection(2, 1);
  ASSERT_EQ(graph.size(), 2u);
  EXPECT_EQ(graph.edge_count(), 2u);
  const auto from_e = graph.out_edges(graph.index_of(e));
  ASSERT_EQ(from_e.size(), 1u);
  EXPECT_EQ(from_e[0].kind, EdgeKind::bruhat);
  const auto from_s = graph.out_edges(graph.index_of(s));
  ASSERT_EQ(from_s.size(), 1u);
  EXPECT_EQ(from_s[0].kind, EdgeKind::quantum);
  EXPECT_EQ(graph.edge_weight(from_s[0]), (Coweight{1, -1}));
  EXPECT_EQ(graph.distance(s, e), 1);
  EXPECT_EQ(graph.min_path_weight(s, e), (Coweight{1, -1}));
  EXPECT_EQ(graph.distance(e, e), 0);
  EXPECT_EQ(graph.min_path_weight(e, e), (Coweight{0, 0}));
}

// Each positive root gives at most one outgoing edge; the identity only has
// the Bruhat edges to the simple reflections.
TEST(Qbg, OutDegreesAndEdgeCounts) {
  for (int rank = 1; rank <= 4; ++rank) {
    const auto& cartan = CartanData::type_a_cached(rank);
    const QuantumBruhatGraph graph(cartan);
    const oracle::Qbg reference(rank + 1);
    std::size_t expected_edges = 0;
    for (const auto& out : reference.edges) expected_edges += out.size();
    EXPECT_EQ(graph.edge_count(), expected_edges);
    for (std::size_t k = 0; k < graph.size(); ++k) {
      EXPECT_LE(graph.out_edges(k).size(), cartan.positive_roots().size());
      EXPECT_EQ(graph.out_edges(k).size(), reference.edges[reference.index.at(test_support::to_perm(graph.vertex(k)))].size());
    }
    EXPECT_EQ(static_cast<int>(graph.out_edges(graph.index_of(cartan.identity())).size()), rank);
    EXPECT_EQ(graph.out_edges(graph.index_of(WeylElement::longest(rank + 1))).size(), cartan.positive_roots().size());
  }
  EXPECT_EQ(QuantumBruhatGraph(CartanData::type_a(2)).edge_count(), 15u);
  EXPECT_EQ(QuantumBruhatGraph(CartanData::type_a(4)).edge_count(), 770u);
}

TEST(Qbg, EdgeLengthBookkeeping) {
  const QuantumBruhatGraph graph(CartanData::type_a(4));
  const auto& two_rho = graph.cartan().two_rho();
  for (std::size_t k = 0; k < graph.size(); ++k) {
    for (const auto& e : graph.out_edges(k)) {
      EXPECT_EQ(graph.vertex(e.target).length() - graph.vertex(k).length(),
                1 - pairing(two_rho, graph.edge_weight(e)));
    }
  }
}

TEST(Qbg, ExhaustiveA2) { check_all_pairs(2); }
TEST(Qbg, ExhaustiveA3) { check_all_pairs(3); }

TEST(Qbg, RandomizedA4) {
  const QuantumBruhatGraph graph(CartanData::type_a(4));
  const oracle::Qbg reference(5);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, reference.vertices.size() - 1);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t a = pick(rng);
    const auto paths = reference.shortest_paths(a);
    for (int inner = 0; inner < 20; ++inner) {
      const std::size_t b = pick(rng);
      ASSERT_EQ(paths.weights[b].size(), 1u);
      const auto u = from_perm(reference.vertices[a]);
      const auto v = from_perm(reference.vertices[b]);
      EXPECT_EQ(graph.distance(u, v), paths.dist[b]);
      EXPECT_EQ(graph.min_path_weight(u, v), to_coweight(*paths.weights[b].begin()));
      EXPECT_EQ(v.length() - u.length(), graph.distance(u, v) - pairing(graph.cartan().two_rho(), graph.min_path_weight(u, v)));
    }
  }
}

TEST(Qbg, ExampleDistances) {
  const QuantumBruhatGraph graph(CartanData::type_a(4));
  const auto c = test_support::example_triple();
  const auto s = WeylElement::simple_reflection(5, c.s);
  EXPECT_EQ(graph.distance(c.w.inverse(), s * c.v), 4);
  EXPECT_EQ((c.w * s * c.v).length(), 4);
  EXPECT_EQ(graph.min_path_weight(c.w.inverse(), c.v), (Coweight{1, 0, 0, 0, -1}));
  EXPECT_EQ(graph.distance(c.w.inverse(), c.v), 5);
}

TEST(Qbg, DotOutput) {
  const QuantumBruhatGraph graph(CartanData::type_a(2));
  const auto dot = graph.to_dot();
  EXPECT_NE(dot.find("digraph"), std::string::npos);
}
