#include "rdv/simulator.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rdv/errors.h"

namespace rdv {
namespace {

// Position along the segment's edge measured from the lower-id endpoint:
// value(t) = offset + slope * t.
struct EdgeMotion {
  Rational offset;
  Rational slope;
};

EdgeMotion motion(const Graph& graph, const Segment& s) {
  const bool forward = s.from == graph.edge(*s.edge).u;
  Rational slope = Rational(1) / s.duration;
  if (!forward) slope = -slope;
  Rational start_pos = forward ? Rational(0) : Rational(1);
  return {start_pos - slope * s.start, slope};
}

Location locate(const Graph& graph, const Segment& s, const Rational& t) {
  if (!s.moving()) return s.from;
  Rational progress = (t - s.start) / s.duration;
  if (progress <= Rational(0)) return s.from;
  if (progress >= Rational(1)) return s.to;
  const bool forward = s.from == graph.edge(*s.edge).u;
  return EdgePoint{*s.edge, forward ? progress : Rational(1) - progress};
}

std::optional<MeetingReport> meet_within(const Graph& graph, const Segment& a, const Segment& b,
                                         const Rational& lo, const Rational& hi) {
  // Both positions are linear on [lo, hi], so the agents either coincide on
  // the whole window or at isolated instants: node instants of a traversal,
  // or a crossing of two traversals of the same edge.
  std::vector<Rational> candidates{lo, hi};
  for (const Segment* s : {&a, &b}) {
    if (s->moving()) {
      candidates.push_back(s->start);
      candidates.push_back(s->start + s->duration);
    }
  }
  if (a.moving() && b.moving() && *a.edge == *b.edge) {
    EdgeMotion ma = motion(graph, a);
    EdgeMotion mb = motion(graph, b);
    if (ma.slope != mb.slope) candidates.push_back((mb.offset - ma.offset) / (ma.slope - mb.slope));
  }
  std::sort(candidates.begin(), candidates.end());

  for (const Rational& t : candidates) {
    if (t < lo || t > hi) continue;
    Location la = locate(graph, a, t);
    if (la != locate(graph, b, t)) continue;
    MeetingReport r;
    r.met = true;
    r.time = t;
    r.point = MeetingPoint{la, t};
    if (std::holds_alternative<Vertex>(la)) {
      r.kind = MeetingCase::kNode;
    } else {
      r.kind = a.from == b.from ? MeetingCase::kCatchUp : MeetingCase::kPass;
    }
    return r;
  }
  return std::nullopt;
}

}  // namespace

Location Trajectory::at(const Graph& graph, const Rational& t) const {
  for (const Segment& s : segments) {
    if (t >= s.start && t <= s.end) return locate(graph, s, t);
  }
  throw std::out_of_range("time outside the trajectory");
}

Trajectory realize(const Graph& graph, const Plan& plan, const WeightFn& weights, const Rational& horizon) {
  Trajectory traj;
  traj.horizon = horizon;
  Rational now(0);
  Vertex at = plan.origin;
  for (const Action& action : plan.actions) {
    if (now >= horizon) break;
    Segment s;
    s.start = now;
    s.from = at;
    if (const auto* t = std::get_if<Traverse>(&action)) {
      const Edge& e = graph.edge(t->edge);
      if (t->from != at || !e.touches(at)) {
        throw std::logic_error("traversal from node " + std::to_string(graph.id(t->from)) +
                               " while the agent is at " + std::to_string(graph.id(at)));
      }
      s.edge = t->edge;
      s.to = e.other(at);
      s.duration = Rational(weights[t->edge]);
      at = s.to;
    } else {
      s.to = at;
      s.duration = Rational(std::get<Wait>(action).duration);
    }
    now += s.duration;
    s.end = min(now, horizon);
    traj.segments.push_back(s);
  }
  if (now < horizon) {
    Segment rest;
    rest.start = now;
    rest.end = horizon;
    rest.from = rest.to = at;
    rest.duration = horizon - now;
    traj.segments.push_back(rest);
  }
  return traj;
}

std::string_view to_string(MeetingCase c) {
  switch (c) {
    case MeetingCase::kNode:
      return "node";
    case MeetingCase::kPass:
      return "pass";
    case MeetingCase::kCatchUp:
      return "catch-up";
  }
  return "?";
}

MeetingReport first_meeting(const Trajectory& a, const Trajectory& b, const Graph& graph) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.segments.size() && j < b.segments.size()) {
    const Segment& sa = a.segments[i];
    const Segment& sb = b.segments[j];
    Rational lo = max(sa.start, sb.start);
    Rational hi = min(sa.end, sb.end);
    if (lo <= hi) {
      if (auto r = meet_within(graph, sa, sb, lo, hi)) return *r;
    }
    if (sa.end < sb.end) {
      ++i;
    } else if (sb.end < sa.end) {
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return MeetingReport{};
}

ProtocolRun run_protocol(const Instance& instance, ProtocolId protocol, const RunOptions& options) {
  InstanceClass needed = required_class(protocol);
  if (!classify(instance).contains(needed)) {
    throw ClassMismatch(std::string(to_string(protocol)) + " requires an " + std::string(to_string(needed)) +
                        " instance");
  }

  ProtocolRun run;
  run.offline = t_opt_exact(instance);
  run.horizon = options.horizon.value_or(
      Rational(options.horizon_multiplier) * Rational(static_cast<std::int64_t>(instance.graph.node_count())) *
      Rational(run.offline.rv_time));

  const AgentView va = view_of(instance, Agent::kA);
  const AgentView vb = view_of(instance, Agent::kB);
  switch (protocol) {
    case ProtocolId::kA1Arbitrary: {
      Message ma = a1_encode(va);
      Message mb = a1_encode(vb);
      run.bits_a = ma.bit_count();
      run.bits_b = mb.bit_count();
      run.plan_a = a1_plan(va, mb.bits());
      run.plan_b = a1_plan(vb, ma.bits());
      break;
    }
    case ProtocolId::kA2OrderedEdges: {
      if (options.a2_exchange == A2Exchange::kSingleShot) {
        Message ma = a2_encode(va);
        Message mb = a2_encode(vb);
        run.bits_a = ma.bit_count();
        run.bits_b = mb.bit_count();
        run.plan_a = a2_plan(va, mb.bits());
        run.plan_b = a2_plan(vb, ma.bits());
      } else {
        BitString r1a = a2_encode_round1(va).bits();
        BitString r1b = a2_encode_round1(vb).bits();
        BitString r2a = a2_encode_round2(va, r1b).bits();
        BitString r2b = a2_encode_round2(vb, r1a).bits();
        run.bits_a = r1a.size() + r2a.size();
        run.bits_b = r1b.size() + r2b.size();
        run.plan_a = a2_plan_two_round(va, r1b, r2b);
        run.plan_b = a2_plan_two_round(vb, r1a, r2a);
      }
      break;
    }
    case ProtocolId::kA3OrderedAgents:
      run.plan_a = a3_plan_lambda(va, options.lambda);
      run.plan_b = a3_plan_lambda(vb, options.lambda);
      break;
    case ProtocolId::kA4NoComm:
      run.plan_a = a4_plan(va, run.horizon.ceil());
      run.plan_b = a4_plan(vb, run.horizon.ceil());
      break;
  }

  Trajectory ta = realize(instance.graph, run.plan_a, instance.w_a, run.horizon);
  Trajectory tb = realize(instance.graph, run.plan_b, instance.w_b, run.horizon);
  run.report = first_meeting(ta, tb, instance.graph);
  run.report.bits = run.bits_a + run.bits_b;
  return run;
}

std::pair<A2Picture, A2Picture> a2_pictures(const Instance& instance, A2Exchange mode) {
  const AgentView va = view_of(instance, Agent::kA);
  const AgentView vb = view_of(instance, Agent::kB);
  if (mode == A2Exchange::kSingleShot) {
    BitString ma = a2_encode(va).bits();
    BitString mb = a2_encode(vb).bits();
    return {a2_picture(va, mb), a2_picture(vb, ma)};
  }
  BitString r1a = a2_encode_round1(va).bits();
  BitString r1b = a2_encode_round1(vb).bits();
  BitString r2a = a2_encode_round2(va, r1b).bits();
  BitString r2b = a2_encode_round2(vb, r1a).bits();
  return {a2_picture_two_round(va, r1b, r2b), a2_picture_two_round(vb, r1a, r2a)};
}

}  // namespace rdv
