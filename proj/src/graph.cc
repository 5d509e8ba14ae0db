#include "rdv/graph.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

#include "rdv/errors.h"

namespace rdv {

Graph Graph::build(std::vector<NodeId> ids, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw InvalidInstance("duplicate node id");
  }
  if (!ids.empty() && ids.front() < 0) throw InvalidInstance("negative node id");

  Graph g;
  g.ids_ = std::move(ids);
  g.adjacency_.resize(g.ids_.size());
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& [a, b] : edges) {
    Vertex va = g.vertex(a);
    Vertex vb = g.vertex(b);
    if (va == vb) throw InvalidInstance("self-loop at node " + std::to_string(a));
    Edge e{std::min(va, vb), std::max(va, vb)};
    if (!seen.insert({e.u, e.v}).second) {
      throw InvalidInstance("parallel edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    EdgeIndex index = g.edges_.size();
    g.edges_.push_back(e);
    g.adjacency_[e.u].push_back({e.v, index});
    g.adjacency_[e.v].push_back({e.u, index});
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Incidence& x, const Incidence& y) { return x.neighbor < y.neighbor; });
  }
  return g;
}

Vertex Graph::vertex(NodeId id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) throw InvalidInstance("unknown node id " + std::to_string(id));
  return static_cast<Vertex>(it - ids_.begin());
}

std::optional<EdgeIndex> Graph::find_edge(Vertex a, Vertex b) const {
  for (const auto& inc : adjacency_.at(a)) {
    if (inc.neighbor == b) return inc.edge;
  }
  return std::nullopt;
}

bool Graph::connected() const {
  if (ids_.empty()) return true;
  std::vector<bool> seen(ids_.size(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (const auto& inc : adjacency_[x]) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = true;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return reached == ids_.size();
}

Graph Graph::subgraph(std::span<const EdgeIndex> keep) const {
  std::vector<std::pair<NodeId, NodeId>> kept;
  kept.reserve(keep.size());
  for (EdgeIndex e : keep) kept.emplace_back(ids_[edges_.at(e).u], ids_[edges_.at(e).v]);
  return build(ids_, kept);
}

WeightFn::WeightFn(std::vector<Weight> weights) : weights_(std::move(weights)) {
  for (Weight w : weights_) {
    if (w < 1) throw InvalidInstance("edge weights must be positive integers");
  }
}

Weight WeightFn::max() const {
  return weights_.empty() ? 0 : *std::max_element(weights_.begin(), weights_.end());
}

Instance Instance::make(Graph graph, Vertex s_a, Vertex s_b, WeightFn w_a, WeightFn w_b) {
  if (s_a >= graph.node_count() || s_b >= graph.node_count()) {
    throw InvalidInstance("start node out of range");
  }
  if (s_a == s_b) throw InvalidInstance("start nodes must differ");
  if (w_a.size() != graph.edge_count() || w_b.size() != graph.edge_count()) {
    throw InvalidInstance("weight function does not cover every edge");
  }
  if (!graph.connected()) throw InvalidInstance("graph is disconnected");
  return Instance{std::move(graph), s_a, s_b, std::move(w_a), std::move(w_b)};
}

Weight Instance::max_weight() const { return std::max(w_a.max(), w_b.max()); }

std::string_view to_string(InstanceClass c) {
  switch (c) {
    case InstanceClass::kArbitrary:
      return "arbitrary";
    case InstanceClass::kOrderedEdges:
      return "ordered-edges";
    case InstanceClass::kOrderedAgents:
      return "ordered-agents";
  }
  return "?";
}

std::optional<InstanceClass> parse_instance_class(std::string_view text) {
  for (auto c : {InstanceClass::kArbitrary, InstanceClass::kOrderedEdges, InstanceClass::kOrderedAgents}) {
    if (text == to_string(c)) return c;
  }
  return std::nullopt;
}

bool ClassSet::contains(InstanceClass c) const {
  switch (c) {
    case InstanceClass::kArbitrary:
      return true;
    case InstanceClass::kOrderedEdges:
      return ordered_edges;
    case InstanceClass::kOrderedAgents:
      return ordered_agents;
  }
  return false;
}

ClassSet classify(const Instance& instance) {
  ClassSet out;
  const WeightFn& wa = instance.w_a;
  const WeightFn& wb = instance.w_b;

  // Walking the edges in w_A order, w_B must tie exactly where w_A ties and
  // strictly increase where w_A does; transitivity covers every pair.
  auto order = sorted_edges(wa);
  out.ordered_edges = true;
  for (std::size_t i = 1; i < order.size(); ++i) {
    EdgeIndex p = order[i - 1];
    EdgeIndex q = order[i];
    bool ok = wa[p] == wa[q] ? wb[p] == wb[q] : wb[p] < wb[q];
    if (!ok) {
      out.ordered_edges = false;
      break;
    }
  }

  bool a_le_b = true;
  bool b_le_a = true;
  for (EdgeIndex e = 0; e < wa.size(); ++e) {
    a_le_b = a_le_b && wa[e] <= wb[e];
    b_le_a = b_le_a && wb[e] <= wa[e];
  }
  out.ordered_agents = a_le_b || b_le_a;
  return out;
}

std::vector<Weight> distances_from(const Graph& graph, std::span<const Weight> weights, Vertex source) {
  std::vector<Weight> d(graph.node_count(), kUnreachable);
  using Item = std::pair<Weight, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  d.at(source) = 0;
  queue.push({0, source});
  while (!queue.empty()) {
    auto [du, u] = queue.top();
    queue.pop();
    if (du != d[u]) continue;
    for (const auto& inc : graph.incident(u)) {
      Weight w = weights[inc.edge];
      if (w < 0) throw std::invalid_argument("negative edge weight");
      Weight candidate = du + w;
      if (candidate < d[inc.neighbor]) {
        d[inc.neighbor] = candidate;
        queue.push({candidate, inc.neighbor});
      }
    }
  }
  return d;
}

Weight dist(const Graph& graph, const WeightFn& w, Vertex u, Vertex v) {
  Weight d = distances_from(graph, w.values(), u).at(v);
  if (d == kUnreachable) throw std::invalid_argument("node unreachable");
  return d;
}

std::vector<EdgeIndex> shortest_path(const Graph& graph, const WeightFn& w, Vertex u, Vertex v) {
  auto to_target = distances_from(graph, w.values(), v);
  if (to_target.at(u) == kUnreachable) throw std::invalid_argument("node unreachable");

  // Greedy walk: the smallest neighbor that stays on some shortest path gives
  // the lexicographically smallest node sequence. Weights are positive, so the
  // remaining distance strictly decreases and the walk terminates.
  std::vector<EdgeIndex> path;
  Vertex x = u;
  while (x != v) {
    for (const auto& inc : graph.incident(x)) {
      if (to_target[inc.neighbor] != kUnreachable && w[inc.edge] + to_target[inc.neighbor] == to_target[x]) {
        path.push_back(inc.edge);
        x = inc.neighbor;
        break;
      }
    }
  }
  return path;
}

int interval_index(Weight d) {
  if (d < 0) throw std::invalid_argument("interval_index of a negative value");
  if (d <= 1) return 0;
  return std::bit_width(static_cast<std::uint64_t>(d - 1));
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }

  std::vector<std::size_t> parent;
};

}  // namespace

Weight bottleneck_threshold(const Graph& graph, const WeightFn& w, Vertex s, Vertex t) {
  if (s == t) throw std::invalid_argument("bottleneck_threshold needs distinct endpoints");
  DisjointSets sets(graph.node_count());
  for (EdgeIndex e : sorted_edges(w)) {
    sets.unite(graph.edge(e).u, graph.edge(e).v);
    if (sets.find(s) == sets.find(t)) return w[e] - 1;
  }
  throw std::invalid_argument("endpoints are disconnected");
}

std::vector<EdgeIndex> sorted_edges(const WeightFn& w) {
  std::vector<EdgeIndex> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](EdgeIndex a, EdgeIndex b) { return w[a] < w[b]; });
  return order;
}

}  // namespace rdv
