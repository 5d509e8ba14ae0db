#ifndef RDV_PLAN_H_
#define RDV_PLAN_H_

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "rdv/graph.h"

namespace rdv {

struct Wait {
  std::int64_t duration;  // > 0
};

struct Traverse {
  EdgeIndex edge;
  Vertex from;
};

using Action = std::variant<Wait, Traverse>;

// Timed action schedule for one agent, starting at origin at time 0.
struct Plan {
  Vertex origin = 0;
  std::vector<Action> actions;

  void wait(std::int64_t duration);
  // Appends the traversals of a path starting at `from`; returns the vertex
  // the path ends at.
  Vertex walk(const Graph& graph, Vertex from, std::span<const EdgeIndex> path);
  // Walks `path` in reverse edge order starting at `from`.
  Vertex walk_back(const Graph& graph, Vertex from, std::span<const EdgeIndex> path);

  // Node the agent occupies after the last action. Throws std::logic_error
  // if a traversal does not start where the agent is.
  Vertex final_node(const Graph& graph) const;
  std::int64_t duration(const WeightFn& w) const;
};

}  // namespace rdv

#endif  // RDV_PLAN_H_
