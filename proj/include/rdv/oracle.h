#ifndef RDV_ORACLE_H_
#define RDV_ORACLE_H_

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "rdv/graph.h"
#include "rdv/rational.h"

namespace rdv {

// A point strictly inside an edge. fraction is measured from the lower-id
// endpoint (Edge::u) and lies in (0, 1).
struct EdgePoint {
  EdgeIndex edge;
  Rational fraction;

  friend bool operator==(const EdgePoint&, const EdgePoint&) = default;
};

using Location = std::variant<Vertex, EdgePoint>;

// Fractions 0 and 1 collapse to the corresponding endpoint.
Location edge_location(const Graph& graph, EdgeIndex edge, const Rational& fraction);

struct MeetingPoint {
  Location location;
  Rational time;
};

struct OfflineResult {
  Rational t_opt;
  MeetingPoint witness;
  Vertex rv_node = 0;
  Weight rv_time = 0;
};

// Best meeting time restricted to one edge (endpoints included).
struct EdgeOptimum {
  Rational time;
  Rational fraction;
};

// Everything the offline optimum is computed from: both agents' distances
// from their own start, the node-rendezvous time of every node and the best
// meeting on every edge.
struct OfflineProfile {
  std::vector<Weight> dist_a;
  std::vector<Weight> dist_b;
  std::vector<Weight> node_time;
  std::vector<EdgeOptimum> edge_best;
};

OfflineProfile offline_profile(const Instance& instance);

// Node minimizing max(dist_A(s_A, u), dist_B(s_B, u)), smallest id on ties,
// and that value.
std::pair<Vertex, Weight> rendezvous_node(const Instance& instance);

// Exact offline optimum over node meetings and opposite-direction meetings
// inside edges.
OfflineResult t_opt_exact(const Instance& instance);

// Grid search over fractions i/resolution on every edge. Uses its own
// all-pairs distance computation. Always >= t_opt_exact.
Rational t_opt_bruteforce(const Instance& instance, std::int64_t resolution);

}  // namespace rdv

#endif  // RDV_ORACLE_H_
