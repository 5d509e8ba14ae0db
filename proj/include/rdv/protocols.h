#ifndef RDV_PROTOCOLS_H_
#define RDV_PROTOCOLS_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rdv/graph.h"
#include "rdv/message.h"
#include "rdv/plan.h"
#include "rdv/rational.h"

namespace rdv {

// What one agent knows: the graph, both start nodes, which agent it is and
// its own weight function. The other agent's weights are not reachable from
// here. Holds references into an Instance that must outlive the view.
class AgentView {
 public:
  AgentView(const Graph& graph, Vertex s_a, Vertex s_b, Agent self, const WeightFn& own)
      : graph_(&graph), s_a_(s_a), s_b_(s_b), self_(self), own_(&own) {}

  const Graph& graph() const { return *graph_; }
  Vertex s_a() const { return s_a_; }
  Vertex s_b() const { return s_b_; }
  Agent self() const { return self_; }
  const WeightFn& weights() const { return *own_; }

  Vertex start() const { return self_ == Agent::kA ? s_a_ : s_b_; }
  Vertex other_start() const { return self_ == Agent::kA ? s_b_ : s_a_; }

 private:
  const Graph* graph_;
  Vertex s_a_;
  Vertex s_b_;
  Agent self_;
  const WeightFn* own_;
};

AgentView view_of(const Instance& instance, Agent k);

enum class ProtocolId { kA1Arbitrary, kA2OrderedEdges, kA3OrderedAgents, kA4NoComm };

// "a1-arbitrary", "a2-ordered-edges", "a3-ordered-agents", "a4-no-comm"
std::string_view to_string(ProtocolId id);
std::optional<ProtocolId> parse_protocol(std::string_view text);
InstanceClass required_class(ProtocolId id);

// ---------------------------------------------------------------------------
// A1: interval exchange, arbitrary weights.

// Interval index of the distance to every node, nodes in id order.
Message a1_encode(const AgentView& view);
// Throws MalformedMessage unless bits hold exactly n gamma codewords.
std::vector<std::uint64_t> a1_decode(const BitString& bits, std::size_t n);
// Node v minimizing max(2^r_A(v), 2^r_B(v)), smallest id on ties.
Vertex a1_target(const std::vector<std::uint64_t>& r_a, const std::vector<std::uint64_t>& r_b);
Plan a1_plan(const AgentView& view, const BitString& received);

// ---------------------------------------------------------------------------
// A2: windowed interval counts, ordered edges.

enum class A2Exchange { kSingleShot, kTwoRound };

std::string_view to_string(A2Exchange mode);
std::optional<A2Exchange> parse_a2_exchange(std::string_view text);

// ceil(log2 n); the half-width of the count window.
int a2_radius(std::size_t n);
// Interval index of the bottleneck threshold, clamped so that a threshold of
// 0 maps to interval 0.
int a2_center(const AgentView& view);
// counts[j] = number of edges whose own weight lies in I_j.
std::vector<std::uint64_t> a2_band_counts(const AgentView& view);

// One agent's weights as published: counts of the intervals
// center-radius .. center+radius and the number of edges below that window.
struct A2Window {
  int center = 0;
  int radius = 0;
  std::vector<std::uint64_t> counts;  // counts[i] is interval center-radius+i
  std::uint64_t below = 0;

  friend bool operator==(const A2Window&, const A2Window&) = default;
};

A2Window a2_window_at(const std::vector<std::uint64_t>& band_counts, int center, int radius);

enum class Band { kZero, kScaled, kDeleted };

// Weight approximation rebuilt from a window. Values are doubled so the
// interval-0 representative 1/2 stays integral: a scaled edge in I_j gets
// 2^j. Deleted edges carry weight 0 and must be skipped.
struct TildeWeights {
  std::vector<Weight> doubled;
  std::vector<Band> band;

  friend bool operator==(const TildeWeights&, const TildeWeights&) = default;
};

// Walks the shared sorted edge order: the first `below` edges are zeroed,
// the window's counts claim the next edges interval by interval and the rest
// are deleted. Throws MalformedMessage if the counts exceed |E| or a negative
// interval has a nonzero count.
TildeWeights a2_reconstruct(const std::vector<EdgeIndex>& sorted, const A2Window& window);

// Both agents' published windows, the rebuilt weights and the chosen node.
struct A2Picture {
  A2Window window_a;
  A2Window window_b;
  TildeWeights tilde_a;
  TildeWeights tilde_b;
  Vertex target = 0;

  friend bool operator==(const A2Picture&, const A2Picture&) = default;
};

// Single time-0 message: gamma(c_K), the counts of intervals
// c_K-2r .. c_K+r and the number of edges below c_K-2r.
Message a2_encode(const AgentView& view);
A2Picture a2_picture(const AgentView& view, const BitString& received);
Plan a2_plan(const AgentView& view, const BitString& received);

// Two instantaneous rounds at time 0: gamma(c_K), then the counts of
// intervals c-r .. c+r and the number of edges below c-r, c = min(c_A, c_B).
Message a2_encode_round1(const AgentView& view);
Message a2_encode_round2(const AgentView& view, const BitString& other_round1);
A2Picture a2_picture_two_round(const AgentView& view, const BitString& other_round1,
                               const BitString& other_round2);
Plan a2_plan_two_round(const AgentView& view, const BitString& other_round1, const BitString& other_round2);

// ---------------------------------------------------------------------------
// A3: no communication, ordered agents. The agent starting at the smaller id
// goes out and comes back; the other goes out and stays.

bool a3_goes_and_returns(const AgentView& view);
Plan a3_plan(const AgentView& view);
// Initial wait is ceil(lambda * T_K(s_A, s_B)). Throws std::invalid_argument
// for lambda < 1.
Plan a3_plan_lambda(const AgentView& view, const Rational& lambda);

// ---------------------------------------------------------------------------
// A4: no communication, arbitrary weights, doubling schedule.

// Whole stages are emitted until the plan lasts at least `horizon`.
Plan a4_plan(const AgentView& view, std::int64_t horizon);
// Start time of stage `stage` (0-based node index) of phase p, x = 2^p.
std::int64_t a4_stage_start(std::size_t n, int phase, std::size_t stage);

}  // namespace rdv

#endif  // RDV_PROTOCOLS_H_
