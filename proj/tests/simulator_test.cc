#include "rdv/simulator.h"

#include <gtest/gtest.h>

#include "rdv/errors.h"
#include "rdv/generators.h"
#include "rdv/harness.h"
#include "test_support.h"

namespace rdv {
namespace {

using testing::single_edge;

Plan plan_of(Vertex origin, std::vector<Action> actions) { return Plan{origin, std::move(actions)}; }

TEST(Realize, EmptyPlanIsOneStay) {
  Graph g = Graph::build({0, 1}, {{0, 1}});
  Trajectory t = realize(g, plan_of(1, {}), WeightFn({3}), Rational(10));
  ASSERT_EQ(t.segments.size(), 1u);
  EXPECT_EQ(t.segments[0].start, Rational(0));
  EXPECT_EQ(t.segments[0].end, Rational(10));
  EXPECT_FALSE(t.segments[0].moving());
  EXPECT_EQ(t.at(g, Rational(7)), Location(Vertex{1}));
}

TEST(Realize, WaitThenTraverse) {
  Graph g = Graph::build({0, 1}, {{0, 1}});
  Trajectory t = realize(g, plan_of(0, {Wait{2}, Traverse{0, 0}}), WeightFn({3}), Rational(20));
  ASSERT_EQ(t.segments.size(), 3u);
  EXPECT_EQ(t.segments[0].end, Rational(2));
  EXPECT_TRUE(t.segments[1].moving());
  EXPECT_EQ(t.segments[1].start, Rational(2));
  EXPECT_EQ(t.segments[1].end, Rational(5));
  EXPECT_EQ(t.at(g, Rational(3)), Location(EdgePoint{0, Rational(1, 3)}));
  EXPECT_EQ(t.at(g, Rational(5)), Location(Vertex{1}));
  EXPECT_EQ(t.segments[2].end, Rational(20));
}

TEST(Realize, ClipsAtHorizon) {
  Graph g = Graph::build({0, 1}, {{0, 1}});
  Trajectory t = realize(g, plan_of(0, {Traverse{0, 0}, Wait{5}}), WeightFn({4}), Rational(2));
  ASSERT_EQ(t.segments.size(), 1u);
  EXPECT_EQ(t.segments[0].end, Rational(2));
  EXPECT_EQ(t.segments[0].duration, Rational(4));
  EXPECT_EQ(t.at(g, Rational(2)), Location(EdgePoint{0, Rational(1, 2)}));
}

TEST(Realize, RejectsTraversalFromElsewhere) {
  Graph g = testing::path3();
  EXPECT_THROW(realize(g, plan_of(0, {Traverse{1, 1}}), WeightFn({1, 1}), Rational(5)), std::logic_error);
}

TEST(Realize, A4PhaseZeroStagesHaveLengthTwo) {
  Instance inst = single_edge(1, 1);
  Trajectory t = realize(inst.graph, a4_plan(view_of(inst, Agent::kA), 4), inst.w_a, Rational(4));
  // Two unit waits, then out and back.
  ASSERT_EQ(t.segments.size(), 4u);
  EXPECT_FALSE(t.segments[0].moving());
  EXPECT_FALSE(t.segments[1].moving());
  EXPECT_TRUE(t.segments[2].moving());
  EXPECT_TRUE(t.segments[3].moving());
  EXPECT_EQ(t.at(inst.graph, Rational(2)), Location(Vertex{0}));
  EXPECT_EQ(t.at(inst.graph, Rational(3)), Location(Vertex{1}));
  EXPECT_EQ(t.at(inst.graph, Rational(4)), Location(Vertex{0}));
}

TEST(FirstMeeting, StationaryAgentsNeverMeet) {
  Graph g = Graph::build({0, 1}, {{0, 1}});
  Trajectory a = realize(g, plan_of(0, {}), WeightFn({1}), Rational(10));
  Trajectory b = realize(g, plan_of(1, {}), WeightFn({1}), Rational(10));
  EXPECT_FALSE(first_meeting(a, b, g).met);
}

TEST(FirstMeeting, OppositePass) {
  Graph g = Graph::build({0, 1}, {{0, 1}});
  Trajectory a = realize(g, plan_of(0, {Traverse{0, 0}}), WeightFn({1}), Rational(10));
  Trajectory b = realize(g, plan_of(1, {Traverse{0, 1}}), WeightFn({3}), Rational(10));
  MeetingReport r = first_meeting(a, b, g);
  ASSERT_TRUE(r.met);
  EXPECT_EQ(r.time, Rational(3, 4));
  EXPECT_EQ(r.point.location, Location(EdgePoint{0, Rational(3, 4)}));
  EXPECT_EQ(r.kind, MeetingCase::kPass);
}

TEST(FirstMeeting, CatchUp) {
  Graph g = Graph::build({0, 1}, {{0, 1}});
  Trajectory a = realize(g, plan_of(0, {Traverse{0, 0}}), WeightFn({4}), Rational(10));
  Trajectory b = realize(g, plan_of(0, {Wait{1}, Traverse{0, 0}}), WeightFn({1}), Rational(10));
  // Both start at node 0, so the first shared location is node 0 at time 0.
  MeetingReport at_start = first_meeting(a, b, g);
  ASSERT_TRUE(at_start.met);
  EXPECT_EQ(at_start.time, Rational(0));
  EXPECT_EQ(at_start.kind, MeetingCase::kNode);

  // Start the fast agent from the far side of a lead-in edge instead.
  Graph h = Graph::build({0, 1, 2}, {{0, 1}, {1, 2}});
  Trajectory slow = realize(h, plan_of(1, {Traverse{1, 1}}), WeightFn({1, 4}), Rational(10));
  Trajectory fast = realize(h, plan_of(0, {Traverse{0, 0}, Traverse{1, 1}}), WeightFn({1, 1}), Rational(10));
  MeetingReport r = first_meeting(slow, fast, h);
  ASSERT_TRUE(r.met);
  EXPECT_EQ(r.time, Rational(4, 3));
  EXPECT_EQ(r.point.location, Location(EdgePoint{1, Rational(1, 3)}));
  EXPECT_EQ(r.kind, MeetingCase::kCatchUp);
}

TEST(FirstMeeting, PassingThroughOccupiedNodeCounts) {
  Graph g = testing::path3();
  Trajectory a = realize(g, plan_of(0, {Traverse{0, 0}, Traverse{1, 1}}), WeightFn({2, 2}), Rational(10));
  Trajectory b = realize(g, plan_of(1, {}), WeightFn({2, 2}), Rational(10));
  MeetingReport r = first_meeting(a, b, g);
  ASSERT_TRUE(r.met);
  EXPECT_EQ(r.time, Rational(2));
  EXPECT_EQ(r.point.location, Location(Vertex{1}));
}

TEST(RunProtocol, Examples) {
  ProtocolRun a3 = run_protocol(single_edge(1, 1), ProtocolId::kA3OrderedAgents);
  ASSERT_TRUE(a3.report.met);
  EXPECT_EQ(a3.report.time, Rational(3, 2));
  EXPECT_EQ(a3.report.kind, MeetingCase::kPass);
  EXPECT_EQ(a3.report.bits, 0u);

  Instance sym = single_edge(2, 2);
  ProtocolRun a1 = run_protocol(sym, ProtocolId::kA1Arbitrary);
  ASSERT_TRUE(a1.report.met);
  EXPECT_EQ(a1.report.time, Rational(2));
  EXPECT_EQ(a1.report.time / a1.offline.t_opt, Rational(2));
  // Per agent: gamma(0) + gamma(1) = 1 + 3 bits.
  EXPECT_EQ(a1.bits_a, 4u);
  EXPECT_EQ(a1.bits_b, 4u);
  EXPECT_EQ(a1.report.bits, 8u);

  ProtocolRun a4 = run_protocol(sym, ProtocolId::kA4NoComm);
  ASSERT_TRUE(a4.report.met);
  EXPECT_EQ(a4.report.bits, 0u);
  EXPECT_LE(a4.report.time / a4.offline.t_opt, Rational(32));
}

TEST(RunProtocol, ClassMismatch) {
  Instance reversed = Instance::make(testing::path3(), 0, 2, WeightFn({1, 2}), WeightFn({2, 1}));
  EXPECT_THROW(run_protocol(reversed, ProtocolId::kA2OrderedEdges), ClassMismatch);
  EXPECT_THROW(run_protocol(reversed, ProtocolId::kA3OrderedAgents), ClassMismatch);
  EXPECT_NO_THROW(run_protocol(reversed, ProtocolId::kA1Arbitrary));
}

TEST(RunProtocol, ExplicitHorizonCanCutTheRun) {
  RunOptions o;
  o.horizon = Rational(1);
  ProtocolRun r = run_protocol(single_edge(1, 1), ProtocolId::kA3OrderedAgents, o);
  EXPECT_FALSE(r.report.met);
  EXPECT_EQ(r.horizon, Rational(1));
}

// Co-location on a fine grid of instants, independent of the sweep.
std::optional<Rational> sampled_meeting(const Trajectory& a, const Trajectory& b, const Graph& g,
                                        const Rational& until, std::int64_t steps) {
  for (std::int64_t i = 0; i <= steps; ++i) {
    Rational t = until * Rational(i, steps);
    if (a.at(g, t) == b.at(g, t)) return t;
  }
  return std::nullopt;
}

class SimulatorProperty : public ::testing::TestWithParam<int> {};

TEST_P(SimulatorProperty, SweepIsSymmetricAndSampledNeverEarlier) {
  const auto seed = static_cast<std::uint64_t>(GetParam());
  Instance inst = suite_instance(seed, static_cast<InstanceClass>(seed % 3), 9, 12);
  for (ProtocolId id : {ProtocolId::kA1Arbitrary, ProtocolId::kA4NoComm}) {
    ProtocolRun run = run_protocol(inst, id);
    ASSERT_TRUE(run.report.met);
    EXPECT_GE(run.report.time, run.offline.t_opt);
    Trajectory ta = realize(inst.graph, run.plan_a, inst.w_a, run.horizon);
    Trajectory tb = realize(inst.graph, run.plan_b, inst.w_b, run.horizon);
    MeetingReport swapped = first_meeting(tb, ta, inst.graph);
    ASSERT_TRUE(swapped.met);
    EXPECT_EQ(swapped.time, run.report.time);
    EXPECT_EQ(ta.at(inst.graph, run.report.time), tb.at(inst.graph, run.report.time));

    auto sampled = sampled_meeting(ta, tb, inst.graph, run.report.time, 2000);
    ASSERT_TRUE(sampled.has_value());
    EXPECT_EQ(*sampled, run.report.time);
  }
}

TEST_P(SimulatorProperty, WitnessPlansMeetAtTOpt) {
  const auto seed = static_cast<std::uint64_t>(GetParam());
  Instance inst = suite_instance(seed, static_cast<InstanceClass>(seed % 3), 9, 12);
  OfflineResult off = t_opt_exact(inst);
  OfflineProfile prof = offline_profile(inst);

  // Route each agent to the witness: to a node directly, or to the nearer
  // endpoint of the witness edge and then onto the edge.
  auto plan_to = [&](Agent k) {
    const Vertex s = inst.start(k);
    const WeightFn& w = inst.weights(k);
    Plan p{s, {}};
    if (const auto* v = std::get_if<Vertex>(&off.witness.location)) {
      p.walk(inst.graph, s, shortest_path(inst.graph, w, s, *v));
      return p;
    }
    const EdgePoint& ep = std::get<EdgePoint>(off.witness.location);
    const Edge& e = inst.graph.edge(ep.edge);
    const auto& d = k == Agent::kA ? prof.dist_a : prof.dist_b;
    const Rational via_u = Rational(d[e.u]) + ep.fraction * Rational(w[ep.edge]);
    const Rational via_v = Rational(d[e.v]) + (Rational(1) - ep.fraction) * Rational(w[ep.edge]);
    const Vertex entry = via_u <= via_v ? e.u : e.v;
    p.walk(inst.graph, s, shortest_path(inst.graph, w, s, entry));
    p.actions.push_back(Traverse{ep.edge, entry});
    return p;
  };
  const Rational horizon = Rational(4) * off.t_opt + Rational(4);
  Trajectory ta = realize(inst.graph, plan_to(Agent::kA), inst.w_a, horizon);
  Trajectory tb = realize(inst.graph, plan_to(Agent::kB), inst.w_b, horizon);
  MeetingReport r = first_meeting(ta, tb, inst.graph);
  ASSERT_TRUE(r.met);
  EXPECT_EQ(r.time, off.t_opt);
}

TEST_P(SimulatorProperty, EveryProtocolMeetsWithinDefaultHorizon) {
  const auto seed = static_cast<std::uint64_t>(GetParam());
  for (ProtocolId id : {ProtocolId::kA1Arbitrary, ProtocolId::kA2OrderedEdges, ProtocolId::kA3OrderedAgents,
                        ProtocolId::kA4NoComm}) {
    Instance inst = suite_instance(seed, required_class(id), 14, 50);
    ProtocolRun run = run_protocol(inst, id);
    EXPECT_TRUE(run.report.met) << to_string(id);
    EXPECT_GE(run.report.time, run.offline.t_opt);
    if (id == ProtocolId::kA3OrderedAgents || id == ProtocolId::kA4NoComm) EXPECT_EQ(run.report.bits, 0u);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SimulatorProperty, ::testing::Range(0, 40));

}  // namespace
}  // namespace rdv
