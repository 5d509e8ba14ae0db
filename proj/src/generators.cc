#include "rdv/generators.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace rdv {
namespace {

// Uniform integer in [lo, hi] by rejection, independent of the standard
// library's distribution implementation.
std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == UINT64_MAX) return rng();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + x % range;
}

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[uniform(rng, 0, i - 1)]);
}

// m distinct values from [1, top] in ascending order (Floyd's sampling).
std::vector<Weight> distinct_sorted(std::mt19937_64& rng, std::size_t m, Weight top) {
  std::set<Weight> chosen;
  for (Weight i = top - static_cast<Weight>(m) + 1; i <= top; ++i) {
    auto t = static_cast<Weight>(uniform(rng, 1, static_cast<std::uint64_t>(i)));
    if (!chosen.insert(t).second) chosen.insert(i);
  }
  return {chosen.begin(), chosen.end()};
}

std::vector<NodeId> ids_upto(std::size_t n) {
  std::vector<NodeId> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

}  // namespace

Instance gen_bipartite(const BipartiteSpec& spec) {
  const std::size_t n = spec.a.size();
  if (n == 0 || spec.b.size() != n) throw std::invalid_argument("bipartite bit vectors must have equal length n >= 1");
  const Weight x = spec.x > 0 ? spec.x : static_cast<Weight>(n);

  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<Weight> wa;
  std::vector<Weight> wb;
  for (std::size_t j = 0; j < n; ++j) {
    edges.emplace_back(0, static_cast<NodeId>(j + 2));
    wa.push_back(spec.a[j] ? 1 : x);
    wb.push_back(x);
  }
  for (std::size_t j = 0; j < n; ++j) {
    edges.emplace_back(1, static_cast<NodeId>(j + 2));
    wa.push_back(x);
    wb.push_back(spec.b[j] ? 1 : x);
  }
  Graph g = Graph::build(ids_upto(n + 2), edges);
  return Instance::make(std::move(g), 0, 1, WeightFn(std::move(wa)), WeightFn(std::move(wb)));
}

Weight path_family_x(int k) {
  const Weight kk = k;
  return kk * kk * kk * kk;
}

std::vector<Vertex> path_family_interior(int k, int p) {
  std::vector<Vertex> nodes;
  for (int t = 0; t <= k; ++t) nodes.push_back(static_cast<Vertex>(2 + (p - 1) * (k + 1) + t));
  return nodes;
}

std::vector<EdgeIndex> path_family_edges(int k, int p) {
  // Edge e_i has index i - 1.
  std::vector<EdgeIndex> out;
  out.push_back(static_cast<EdgeIndex>(k * k + k + p - 1));
  for (int t = 1; t <= k; ++t) out.push_back(static_cast<EdgeIndex>((p - 1) * k + t - 1));
  out.push_back(static_cast<EdgeIndex>(k * k + k - p));
  return out;
}

Instance gen_path_family(const PathFamilySpec& spec) {
  const int k = spec.k;
  const int j = spec.j;
  if (k < 2) throw std::invalid_argument("path family needs k >= 2");
  if (j < 1 || j > k) throw std::invalid_argument("path index j must lie in 1..k");
  const std::size_t m = static_cast<std::size_t>(k * k + 2 * k);
  const Weight x = path_family_x(k);

  // Endpoints per edge index, filled path by path.
  std::vector<std::pair<NodeId, NodeId>> edges(m);
  for (int p = 1; p <= k; ++p) {
    auto interior = path_family_interior(k, p);
    auto path = path_family_edges(k, p);
    std::vector<NodeId> nodes{0};
    for (Vertex v : interior) nodes.push_back(static_cast<NodeId>(v));
    nodes.push_back(1);
    for (std::size_t t = 0; t < path.size(); ++t) edges[path[t]] = {nodes[t], nodes[t + 1]};
  }

  std::vector<Weight> wa(m);
  std::vector<Weight> wb(m);
  for (std::size_t idx = 0; idx < m; ++idx) {
    const Weight i = static_cast<Weight>(idx) + 1;
    wa[idx] = x + i;
    if (i <= static_cast<Weight>(j) * k) {
      wb[idx] = i;
    } else if (i <= static_cast<Weight>(k) * k + k - j + 1) {
      wb[idx] = x + i;
    } else {
      wb[idx] = k * x + i;
    }
  }
  Graph g = Graph::build(ids_upto(static_cast<std::size_t>(k * k + k + 2)), edges);
  return Instance::make(std::move(g), 0, 1, WeightFn(std::move(wa)), WeightFn(std::move(wb)));
}

AdversaryOutcome adversary_bipartite(std::size_t n, ProtocolId protocol, const RunOptions& options) {
  if (protocol == ProtocolId::kA1Arbitrary || protocol == ProtocolId::kA2OrderedEdges) {
    throw std::invalid_argument("the bipartite adversary only handles message-free protocols");
  }
  if (n < 2) throw std::invalid_argument("adversary needs n >= 2");

  // B's weights are not visible to A, so any placeholder works while A's
  // behaviour during [0, n] is observed.
  BipartiteSpec spec{std::vector<bool>(n, true), std::vector<bool>(n, false), 0};
  Instance probe = gen_bipartite(spec);
  const AgentView va = view_of(probe, Agent::kA);
  const Rational budget(static_cast<std::int64_t>(n));
  Plan plan = protocol == ProtocolId::kA4NoComm ? a4_plan(va, static_cast<std::int64_t>(n))
                                                : a3_plan_lambda(va, options.lambda);
  Trajectory traj = realize(probe.graph, plan, probe.w_a, budget);

  std::vector<bool> touched(probe.graph.node_count(), false);
  for (const Segment& s : traj.segments) {
    touched[s.from] = true;
    if (s.start + s.duration <= budget) touched[s.to] = true;
  }
  std::size_t chosen = 0;
  for (std::size_t j = 1; j <= n && chosen == 0; ++j) {
    if (!touched[j + 1]) chosen = j;
  }
  if (chosen == 0) throw std::logic_error("agent A touched every v_j within n time units");

  spec.b[chosen - 1] = true;
  AdversaryOutcome out{gen_bipartite(spec), chosen, {}};
  out.run = run_protocol(out.instance, protocol, options);
  return out;
}

Instance gen_random(const RandomSpec& spec) {
  const std::size_t n = spec.n;
  if (n < 2) throw std::invalid_argument("random instance needs n >= 2");
  if (spec.max_weight < 1) throw std::invalid_argument("max_weight must be positive");
  if (!(spec.edge_density >= 0.0 && spec.edge_density <= 1.0)) {
    throw std::invalid_argument("edge density must lie in [0, 1]");
  }
  const std::size_t pairs = n * (n - 1) / 2;
  const auto m = static_cast<std::size_t>(std::llround(spec.edge_density * static_cast<double>(pairs)));
  if (m < n - 1) throw std::invalid_argument("edge density below the spanning-tree threshold");

  std::mt19937_64 rng(spec.seed);

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);
  std::set<std::pair<Vertex, Vertex>> chosen;
  for (std::size_t i = 1; i < n; ++i) {
    Vertex a = order[i];
    Vertex b = order[uniform(rng, 0, i - 1)];
    chosen.insert({std::min(a, b), std::max(a, b)});
  }
  std::vector<std::pair<Vertex, Vertex>> spare;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!chosen.count({u, v})) spare.emplace_back(u, v);
    }
  }
  shuffle(spare, rng);
  for (std::size_t i = 0; chosen.size() < m; ++i) chosen.insert(spare[i]);

  std::vector<std::pair<NodeId, NodeId>> edges;
  for (const auto& [u, v] : chosen) edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));

  const auto s_a = static_cast<Vertex>(uniform(rng, 0, n - 1));
  auto s_b = static_cast<Vertex>(uniform(rng, 0, n - 2));
  if (s_b >= s_a) ++s_b;

  const auto top = static_cast<std::uint64_t>(spec.max_weight);
  std::vector<Weight> wa(m);
  std::vector<Weight> wb(m);
  switch (spec.cls) {
    case InstanceClass::kArbitrary:
      for (std::size_t e = 0; e < m; ++e) {
        wa[e] = static_cast<Weight>(uniform(rng, 1, top));
        wb[e] = static_cast<Weight>(uniform(rng, 1, top));
      }
      break;
    case InstanceClass::kOrderedEdges: {
      // One shared strict order, two strictly increasing assignments over it.
      std::vector<std::size_t> rank(m);
      std::iota(rank.begin(), rank.end(), 0);
      shuffle(rank, rng);
      const Weight ceiling = std::max<Weight>(spec.max_weight, static_cast<Weight>(m));
      auto values_a = distinct_sorted(rng, m, ceiling);
      auto values_b = distinct_sorted(rng, m, ceiling);
      for (std::size_t e = 0; e < m; ++e) {
        wa[e] = values_a[rank[e]];
        wb[e] = values_b[rank[e]];
      }
      break;
    }
    case InstanceClass::kOrderedAgents:
      for (std::size_t e = 0; e < m; ++e) {
        wb[e] = static_cast<Weight>(uniform(rng, 1, top));
        wa[e] = static_cast<Weight>(uniform(rng, 1, static_cast<std::uint64_t>(wb[e])));
      }
      break;
  }

  Graph g = Graph::build(ids_upto(n), edges);
  return Instance::make(std::move(g), s_a, s_b, WeightFn(std::move(wa)), WeightFn(std::move(wb)));
}

}  // namespace rdv
