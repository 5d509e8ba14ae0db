#include "rdv/plan.h"

#include <stdexcept>

namespace rdv {

void Plan::wait(std::int64_t duration) {
  if (duration > 0) actions.push_back(Wait{duration});
}

Vertex Plan::walk(const Graph& graph, Vertex from, std::span<const EdgeIndex> path) {
  Vertex at = from;
  for (EdgeIndex e : path) {
    actions.push_back(Traverse{e, at});
    at = graph.edge(e).other(at);
  }
  return at;
}

Vertex Plan::walk_back(const Graph& graph, Vertex from, std::span<const EdgeIndex> path) {
  Vertex at = from;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    actions.push_back(Traverse{*it, at});
    at = graph.edge(*it).other(at);
  }
  return at;
}

Vertex Plan::final_node(const Graph& graph) const {
  Vertex at = origin;
  for (const Action& a : actions) {
    if (const auto* t = std::get_if<Traverse>(&a)) {
      if (t->from != at || !graph.edge(t->edge).touches(at)) {
        throw std::logic_error("traversal does not start at the agent's position");
      }
      at = graph.edge(t->edge).other(at);
    }
  }
  return at;
}

std::int64_t Plan::duration(const WeightFn& w) const {
  std::int64_t total = 0;
  for (const Action& a : actions) {
    if (const auto* t = std::get_if<Traverse>(&a)) {
      total += w[t->edge];
    } else {
      total += std::get<Wait>(a).duration;
    }
  }
  return total;
}

}  // namespace rdv
