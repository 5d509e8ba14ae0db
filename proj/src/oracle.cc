#include "rdv/oracle.h"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>

namespace rdv {
namespace {

// value(f) = offset + slope * f
struct Line {
  Rational offset;
  Rational slope;

  Rational at(const Rational& f) const { return offset + slope * f; }
};

std::optional<Rational> crossing(const Line& p, const Line& q) {
  if (p.slope == q.slope) return std::nullopt;
  return (q.offset - p.offset) / (p.slope - q.slope);
}

// Earliest arrival of one agent at fraction f of the edge: through u, or
// through v and back along the edge.
struct Arrival {
  Line via_u;
  Line via_v;

  Rational at(const Rational& f) const { return min(via_u.at(f), via_v.at(f)); }
};

Arrival arrival(Weight du, Weight dv, Weight w) {
  return Arrival{Line{Rational(du), Rational(w)}, Line{Rational(dv + w), Rational(-w)}};
}

EdgeOptimum best_on_edge(const Arrival& a, const Arrival& b) {
  // max(arr_A, arr_B) is piecewise linear; its minimum over [0,1] sits at an
  // endpoint, a breakpoint of either arrival, or a crossing of two pieces.
  std::vector<Rational> candidates{Rational(0), Rational(1)};
  auto consider = [&](std::optional<Rational> f) {
    if (f && *f >= Rational(0) && *f <= Rational(1)) candidates.push_back(*f);
  };
  consider(crossing(a.via_u, a.via_v));
  consider(crossing(b.via_u, b.via_v));
  for (const Line* p : {&a.via_u, &a.via_v}) {
    for (const Line* q : {&b.via_u, &b.via_v}) consider(crossing(*p, *q));
  }
  std::sort(candidates.begin(), candidates.end());

  EdgeOptimum best{max(a.at(candidates[0]), b.at(candidates[0])), candidates[0]};
  for (const Rational& f : candidates) {
    Rational value = max(a.at(f), b.at(f));
    if (value < best.time) best = {value, f};
  }
  return best;
}

}  // namespace

Location edge_location(const Graph& graph, EdgeIndex edge, const Rational& fraction) {
  if (fraction == Rational(0)) return graph.edge(edge).u;
  if (fraction == Rational(1)) return graph.edge(edge).v;
  return EdgePoint{edge, fraction};
}

OfflineProfile offline_profile(const Instance& instance) {
  const Graph& g = instance.graph;
  OfflineProfile p;
  p.dist_a = distances_from(g, instance.w_a.values(), instance.s_a);
  p.dist_b = distances_from(g, instance.w_b.values(), instance.s_b);
  p.node_time.resize(g.node_count());
  for (Vertex v = 0; v < g.node_count(); ++v) p.node_time[v] = std::max(p.dist_a[v], p.dist_b[v]);
  p.edge_best.reserve(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    p.edge_best.push_back(best_on_edge(arrival(p.dist_a[edge.u], p.dist_a[edge.v], instance.w_a[e]),
                                       arrival(p.dist_b[edge.u], p.dist_b[edge.v], instance.w_b[e])));
  }
  return p;
}

std::pair<Vertex, Weight> rendezvous_node(const Instance& instance) {
  auto da = distances_from(instance.graph, instance.w_a.values(), instance.s_a);
  auto db = distances_from(instance.graph, instance.w_b.values(), instance.s_b);
  Vertex best = 0;
  Weight best_time = kUnreachable;
  for (Vertex v = 0; v < instance.graph.node_count(); ++v) {
    Weight t = std::max(da[v], db[v]);
    if (t < best_time) {
      best = v;
      best_time = t;
    }
  }
  return {best, best_time};
}

OfflineResult t_opt_exact(const Instance& instance) {
  OfflineProfile p = offline_profile(instance);
  OfflineResult r;
  std::tie(r.rv_node, r.rv_time) = rendezvous_node(instance);
  r.t_opt = Rational(r.rv_time);
  r.witness = MeetingPoint{r.rv_node, r.t_opt};
  for (EdgeIndex e = 0; e < p.edge_best.size(); ++e) {
    if (p.edge_best[e].time < r.t_opt) {
      r.t_opt = p.edge_best[e].time;
      r.witness = MeetingPoint{edge_location(instance.graph, e, p.edge_best[e].fraction), r.t_opt};
    }
  }
  return r;
}

Rational t_opt_bruteforce(const Instance& instance, std::int64_t resolution) {
  if (resolution < 1) throw std::invalid_argument("resolution must be positive");
  const Graph& g = instance.graph;
  const std::size_t n = g.node_count();

  auto all_pairs = [&](const WeightFn& w) {
    std::vector<std::vector<Weight>> d(n, std::vector<Weight>(n, kUnreachable));
    for (Vertex v = 0; v < n; ++v) d[v][v] = 0;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edge(e);
      d[edge.u][edge.v] = std::min(d[edge.u][edge.v], w[e]);
      d[edge.v][edge.u] = d[edge.u][edge.v];
    }
    for (Vertex k = 0; k < n; ++k) {
      for (Vertex i = 0; i < n; ++i) {
        if (d[i][k] == kUnreachable) continue;
        for (Vertex j = 0; j < n; ++j) {
          if (d[k][j] != kUnreachable) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        }
      }
    }
    return d;
  };
  auto da = all_pairs(instance.w_a)[instance.s_a];
  auto db = all_pairs(instance.w_b)[instance.s_b];

  // Everything is scaled by the resolution so the grid stays integral.
  const std::int64_t r = resolution;
  std::int64_t best = kUnreachable;
  for (Vertex v = 0; v < n; ++v) best = std::min(best, std::max(da[v], db[v]) * r);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    const Weight wa = instance.w_a[e];
    const Weight wb = instance.w_b[e];
    for (std::int64_t i = 0; i <= r; ++i) {
      std::int64_t arr_a = std::min(da[edge.u] * r + i * wa, da[edge.v] * r + (r - i) * wa);
      std::int64_t arr_b = std::min(db[edge.u] * r + i * wb, db[edge.v] * r + (r - i) * wb);
      best = std::min(best, std::max(arr_a, arr_b));
    }
  }
  return Rational(best, r);
}

}  // namespace rdv
