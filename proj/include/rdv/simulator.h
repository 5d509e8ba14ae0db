#ifndef RDV_SIMULATOR_H_
#define RDV_SIMULATOR_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rdv/graph.h"
#include "rdv/oracle.h"
#include "rdv/plan.h"
#include "rdv/protocols.h"
#include "rdv/rational.h"

namespace rdv {

// One piece of a trajectory: a stay at `from` (from == to, no edge) or a
// uniform-speed traversal of `edge` from `from` to `to` taking `duration`.
// A traversal cut by the horizon keeps its full duration but ends early.
struct Segment {
  Rational start;
  Rational end;
  Vertex from = 0;
  Vertex to = 0;
  std::optional<EdgeIndex> edge;
  Rational duration;

  bool moving() const { return edge.has_value(); }
};

// Segments tile [0, horizon] without gaps.
struct Trajectory {
  std::vector<Segment> segments;
  Rational horizon;

  Location at(const Graph& graph, const Rational& t) const;
};

// Throws std::logic_error when a traversal does not start at the agent's
// current node.
Trajectory realize(const Graph& graph, const Plan& plan, const WeightFn& weights, const Rational& horizon);

enum class MeetingCase { kNode, kPass, kCatchUp };

std::string_view to_string(MeetingCase c);

struct MeetingReport {
  bool met = false;
  Rational time;
  MeetingPoint point;
  MeetingCase kind = MeetingCase::kNode;
  std::size_t bits = 0;
};

// Earliest time in [0, min horizon] at which both agents share a location.
MeetingReport first_meeting(const Trajectory& a, const Trajectory& b, const Graph& graph);

struct RunOptions {
  Rational lambda{1};
  A2Exchange a2_exchange = A2Exchange::kSingleShot;
  // Horizon = multiplier * n * rv_time unless `horizon` is set.
  std::int64_t horizon_multiplier = 16;
  std::optional<Rational> horizon;
};

struct ProtocolRun {
  MeetingReport report;
  OfflineResult offline;
  Plan plan_a;
  Plan plan_b;
  std::size_t bits_a = 0;
  std::size_t bits_b = 0;
  Rational horizon;
};

// Encodes both sides, exchanges the bits, builds both plans, realizes them
// and looks for the first meeting. Throws ClassMismatch if the instance is
// not in the protocol's required class.
ProtocolRun run_protocol(const Instance& instance, ProtocolId protocol, const RunOptions& options = {});

// A2's reconstruction as computed by agent A and by agent B after the
// time-0 exchange.
std::pair<A2Picture, A2Picture> a2_pictures(const Instance& instance, A2Exchange mode);

}  // namespace rdv

#endif  // RDV_SIMULATOR_H_
