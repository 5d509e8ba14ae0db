#ifndef RDV_GRAPH_H_
#define RDV_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace rdv {

// External node identifier as it appears in instance files.
using NodeId = std::int64_t;
// Dense node index. Vertices are numbered in increasing NodeId order, so
// comparing vertices is the same as comparing identifiers.
using Vertex = std::size_t;
// Position of an edge in the graph's canonical edge list.
using EdgeIndex = std::size_t;
// Traversal time of an edge, and path lengths built from it.
using Weight = std::int64_t;

inline constexpr Weight kUnreachable = std::numeric_limits<Weight>::max();

// Undirected edge with u < v.
struct Edge {
  Vertex u;
  Vertex v;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool touches(Vertex x) const { return x == u || x == v; }
};

struct Incidence {
  Vertex neighbor;
  EdgeIndex edge;
};

// Simple undirected graph. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Validates distinct non-negative ids, no self-loops, no parallel edges and
  // known endpoints. Edge order is preserved as the canonical edge list.
  // Throws InvalidInstance.
  static Graph build(std::vector<NodeId> ids, const std::vector<std::pair<NodeId, NodeId>>& edges);

  std::size_t node_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  NodeId id(Vertex v) const { return ids_.at(v); }
  std::span<const NodeId> ids() const { return ids_; }
  // Throws InvalidInstance for an unknown id.
  Vertex vertex(NodeId id) const;

  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }
  // Incident edges of v ordered by neighbor.
  std::span<const Incidence> incident(Vertex v) const { return adjacency_.at(v); }
  std::optional<EdgeIndex> find_edge(Vertex a, Vertex b) const;

  bool connected() const;

  // Same node set, only the listed edges (in the given order).
  Graph subgraph(std::span<const EdgeIndex> keep) const;

 private:
  std::vector<NodeId> ids_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

// Positive integer weight per edge, indexed by EdgeIndex.
class WeightFn {
 public:
  WeightFn() = default;
  // Throws InvalidInstance if any weight is < 1.
  explicit WeightFn(std::vector<Weight> weights);

  Weight operator[](EdgeIndex e) const { return weights_[e]; }
  std::size_t size() const { return weights_.size(); }
  std::span<const Weight> values() const { return weights_; }
  Weight max() const;

  friend bool operator==(const WeightFn&, const WeightFn&) = default;

 private:
  std::vector<Weight> weights_;
};

enum class Agent { kA, kB };

inline Agent other(Agent k) { return k == Agent::kA ? Agent::kB : Agent::kA; }

struct Instance {
  Graph graph;
  Vertex s_a = 0;
  Vertex s_b = 0;
  WeightFn w_a;
  WeightFn w_b;

  // Rejects s_a == s_b, weight vectors of the wrong size and disconnected
  // graphs. Throws InvalidInstance.
  static Instance make(Graph graph, Vertex s_a, Vertex s_b, WeightFn w_a, WeightFn w_b);

  Vertex start(Agent k) const { return k == Agent::kA ? s_a : s_b; }
  const WeightFn& weights(Agent k) const { return k == Agent::kA ? w_a : w_b; }
  // max(M_A, M_B)
  Weight max_weight() const;
};

enum class InstanceClass { kArbitrary, kOrderedEdges, kOrderedAgents };

std::string_view to_string(InstanceClass c);
// Accepts "arbitrary", "ordered-edges", "ordered-agents".
std::optional<InstanceClass> parse_instance_class(std::string_view text);

struct ClassSet {
  bool ordered_edges = false;
  bool ordered_agents = false;

  bool contains(InstanceClass c) const;
};

// Every class whose predicate holds. Arbitrary always does.
ClassSet classify(const Instance& instance);

// Single-source shortest path lengths. Accepts zero weights; vertices that
// cannot be reached get kUnreachable.
std::vector<Weight> distances_from(const Graph& graph, std::span<const Weight> weights, Vertex source);

// Throws std::invalid_argument if v is unreachable from u.
Weight dist(const Graph& graph, const WeightFn& w, Vertex u, Vertex v);

// Minimum-weight u-v path as an edge sequence. Among equal-weight paths the
// one with the lexicographically smallest node sequence is returned.
std::vector<EdgeIndex> shortest_path(const Graph& graph, const WeightFn& w, Vertex u, Vertex v);

// Index j with d in I_j, where I_0 = [0,1] and I_j = (2^(j-1), 2^j].
// Throws std::invalid_argument for negative d.
int interval_index(Weight d);

// Largest m such that deleting every edge heavier than m separates s from t,
// i.e. (min over s-t paths of the heaviest edge on the path) - 1.
Weight bottleneck_threshold(const Graph& graph, const WeightFn& w, Vertex s, Vertex t);

// Edges in non-decreasing weight order, ties by edge index.
std::vector<EdgeIndex> sorted_edges(const WeightFn& w);

}  // namespace rdv

#endif  // RDV_GRAPH_H_
