#include "rdv/oracle.h"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "rdv/generators.h"
#include "rdv/harness.h"
#include "test_support.h"

namespace rdv {
namespace {

using testing::single_edge;

TEST(RendezvousNode, SymmetricEdgeTiesToSmallerId) {
  auto [node, time] = rendezvous_node(single_edge(2, 2));
  EXPECT_EQ(node, 0u);
  EXPECT_EQ(time, 2);
}

TEST(RendezvousNode, PathMiddleNode) {
  // a-b-c with s_A = a, s_B = c and weights (1, 10) for both agents.
  Instance inst = Instance::make(testing::path3(), 0, 2, WeightFn({1, 10}), WeightFn({1, 10}));
  auto [node, time] = rendezvous_node(inst);
  EXPECT_EQ(node, 1u);
  EXPECT_EQ(time, 10);
}

TEST(RendezvousNode, BipartiteSharedIndex) {
  Instance inst = gen_bipartite({{false, true, false}, {false, true, true}, 0});
  auto [node, time] = rendezvous_node(inst);
  EXPECT_EQ(inst.graph.id(node), 3);  // v_2
  EXPECT_EQ(time, 1);
}

TEST(TOptExact, SymmetricEdgeMeetsAtMidpoint) {
  OfflineResult r = t_opt_exact(single_edge(2, 2));
  EXPECT_EQ(r.t_opt, Rational(1));
  EXPECT_EQ(r.witness.location, Location(EdgePoint{0, Rational(1, 2)}));
  EXPECT_EQ(r.witness.time, Rational(1));
  EXPECT_EQ(r.rv_time, 2);
}

TEST(TOptExact, PassEquationOnUnequalEdge) {
  OfflineResult r = t_opt_exact(single_edge(1, 3));
  EXPECT_EQ(r.t_opt, Rational(3, 4));
  EXPECT_EQ(r.witness.location, Location(EdgePoint{0, Rational(3, 4)}));
}

TEST(TOptExact, PrefersNodeWitnessOnTies) {
  Instance inst = Instance::make(testing::path3(), 0, 2, WeightFn({1, 1}), WeightFn({1, 1}));
  OfflineResult r = t_opt_exact(inst);
  EXPECT_EQ(r.t_opt, Rational(1));
  EXPECT_EQ(r.witness.location, Location(Vertex{1}));
}

TEST(TOptExact, EdgeLocationNormalizesEndpoints) {
  Graph g = Graph::build({0, 1}, {{0, 1}});
  EXPECT_EQ(edge_location(g, 0, Rational(0)), Location(Vertex{0}));
  EXPECT_EQ(edge_location(g, 0, Rational(1)), Location(Vertex{1}));
  EXPECT_EQ(edge_location(g, 0, Rational(1, 3)), Location(EdgePoint{0, Rational(1, 3)}));
}

TEST(TOptExact, BipartiteValues) {
  const Weight x = 5;
  EXPECT_EQ(t_opt_exact(gen_bipartite({{true, false, false, false, false}, {true, false, false, false, false}, 0})).t_opt,
            Rational(1));
  // No flags at all: every route costs X per edge and the agents meet at the
  // middle of a path of two X-edges.
  OfflineResult none = t_opt_exact(gen_bipartite({std::vector<bool>(5), std::vector<bool>(5), 0}));
  EXPECT_EQ(none.t_opt, Rational(x));
  EXPECT_EQ(none.rv_time, x);
  // Flags on disjoint indices: a pass on an edge beats X.
  OfflineResult disjoint =
      t_opt_exact(gen_bipartite({{true, false, false, false, false}, {false, true, false, false, false}, 0}));
  EXPECT_EQ(disjoint.t_opt, Rational(x + 1, 2));
  EXPECT_EQ(disjoint.rv_time, x);
}

TEST(TOptBruteforce, Examples) {
  Instance unequal = single_edge(1, 3);
  Rational grid = t_opt_bruteforce(unequal, 1000);
  EXPECT_GE(grid, Rational(3, 4));
  EXPECT_LE(grid - Rational(3, 4), Rational(1, 250));
  EXPECT_EQ(t_opt_bruteforce(single_edge(2, 2), 2), Rational(1));
  EXPECT_EQ(t_opt_bruteforce(unequal, 1), Rational(t_opt_exact(unequal).rv_time));
  EXPECT_THROW(t_opt_bruteforce(unequal, 0), std::invalid_argument);
}

class OracleProperty : public ::testing::TestWithParam<int> {
 protected:
  Instance instance() const {
    const auto seed = static_cast<std::uint64_t>(GetParam());
    return suite_instance(seed, static_cast<InstanceClass>(seed % 3), 8, 40);
  }
};

TEST_P(OracleProperty, SandwichAndGridAgreement) {
  Instance inst = instance();
  OfflineResult r = t_opt_exact(inst);
  EXPECT_LE(r.t_opt, Rational(r.rv_time));
  EXPECT_LE(Rational(r.rv_time), Rational(2) * r.t_opt);
  EXPECT_EQ(r.witness.time, r.t_opt);

  Rational previous = t_opt_bruteforce(inst, 1);
  EXPECT_EQ(previous, Rational(r.rv_time));
  for (std::int64_t res : {2, 6, 60, 600, 6000}) {
    Rational grid = t_opt_bruteforce(inst, res);
    EXPECT_LE(r.t_opt, grid);
    EXPECT_LE(grid - r.t_opt, Rational(inst.max_weight(), res));
    // Resolutions divide each other, so grids are nested.
    EXPECT_LE(grid, previous);
    previous = grid;
  }
}

TEST_P(OracleProperty, WitnessIsReachableByBothAgentsInTime) {
  Instance inst = instance();
  OfflineResult r = t_opt_exact(inst);
  OfflineProfile p = offline_profile(inst);
  if (const auto* v = std::get_if<Vertex>(&r.witness.location)) {
    EXPECT_EQ(Rational(p.node_time[*v]), r.t_opt);
  } else {
    const EdgePoint& ep = std::get<EdgePoint>(r.witness.location);
    EXPECT_EQ(p.edge_best[ep.edge].time, r.t_opt);
    EXPECT_EQ(p.edge_best[ep.edge].fraction, ep.fraction);
  }
}

TEST_P(OracleProperty, InvariantUnderRelabeling) {
  Instance inst = instance();
  const std::size_t n = inst.graph.node_count();
  std::vector<NodeId> fresh(n);
  std::iota(fresh.begin(), fresh.end(), 0);
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
  std::shuffle(fresh.begin(), fresh.end(), rng);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (const Edge& e : inst.graph.edges()) edges.emplace_back(fresh[e.u] * 3 + 7, fresh[e.v] * 3 + 7);
  std::vector<NodeId> ids;
  for (NodeId f : fresh) ids.push_back(f * 3 + 7);
  Graph g = Graph::build(ids, edges);
  Instance relabeled = Instance::make(g, g.vertex(fresh[inst.s_a] * 3 + 7), g.vertex(fresh[inst.s_b] * 3 + 7),
                                      inst.w_a, inst.w_b);
  EXPECT_EQ(t_opt_exact(relabeled).t_opt, t_opt_exact(inst).t_opt);
  EXPECT_EQ(t_opt_exact(relabeled).rv_time, t_opt_exact(inst).rv_time);
}

TEST_P(OracleProperty, ScalesWithWeights) {
  Instance inst = instance();
  const Weight factor = 1 + GetParam() % 5;
  std::vector<Weight> wa;
  std::vector<Weight> wb;
  for (EdgeIndex e = 0; e < inst.graph.edge_count(); ++e) {
    wa.push_back(inst.w_a[e] * factor);
    wb.push_back(inst.w_b[e] * factor);
  }
  Instance scaled = Instance::make(inst.graph, inst.s_a, inst.s_b, WeightFn(wa), WeightFn(wb));
  EXPECT_EQ(t_opt_exact(scaled).t_opt, t_opt_exact(inst).t_opt * Rational(factor));
}

TEST_P(OracleProperty, SymmetricUnderSwappingAgents) {
  Instance inst = instance();
  Instance swapped = Instance::make(inst.graph, inst.s_b, inst.s_a, inst.w_b, inst.w_a);
  EXPECT_EQ(t_opt_exact(swapped).t_opt, t_opt_exact(inst).t_opt);
}

INSTANTIATE_TEST_SUITE_P(Seeds, OracleProperty, ::testing::Range(0, 60));

}  // namespace
}  // namespace rdv
