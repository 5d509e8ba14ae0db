#include "rdv/protocols.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "rdv/errors.h"

namespace rdv {

AgentView view_of(const Instance& instance, Agent k) {
  return AgentView(instance.graph, instance.s_a, instance.s_b, k, instance.weights(k));
}

std::string_view to_string(ProtocolId id) {
  switch (id) {
    case ProtocolId::kA1Arbitrary:
      return "a1-arbitrary";
    case ProtocolId::kA2OrderedEdges:
      return "a2-ordered-edges";
    case ProtocolId::kA3OrderedAgents:
      return "a3-ordered-agents";
    case ProtocolId::kA4NoComm:
      return "a4-no-comm";
  }
  return "?";
}

std::optional<ProtocolId> parse_protocol(std::string_view text) {
  for (auto id : {ProtocolId::kA1Arbitrary, ProtocolId::kA2OrderedEdges, ProtocolId::kA3OrderedAgents,
                  ProtocolId::kA4NoComm}) {
    if (text == to_string(id)) return id;
  }
  return std::nullopt;
}

InstanceClass required_class(ProtocolId id) {
  switch (id) {
    case ProtocolId::kA2OrderedEdges:
      return InstanceClass::kOrderedEdges;
    case ProtocolId::kA3OrderedAgents:
      return InstanceClass::kOrderedAgents;
    default:
      return InstanceClass::kArbitrary;
  }
}

// ---------------------------------------------------------------------------
// A1

Message a1_encode(const AgentView& view) {
  auto d = distances_from(view.graph(), view.weights().values(), view.start());
  Message m;
  for (Weight dv : d) m.add_gamma(static_cast<std::uint64_t>(interval_index(dv)));
  return m;
}

std::vector<std::uint64_t> a1_decode(const BitString& bits, std::size_t n) {
  BitReader reader(bits);
  std::vector<std::uint64_t> out(n);
  for (auto& r : out) r = reader.gamma();
  reader.expect_end();
  return out;
}

Vertex a1_target(const std::vector<std::uint64_t>& r_a, const std::vector<std::uint64_t>& r_b) {
  // 2^r is monotone in r, so comparing max(r_A, r_B) orders T' identically.
  Vertex best = 0;
  for (Vertex v = 1; v < r_a.size(); ++v) {
    if (std::max(r_a[v], r_b[v]) < std::max(r_a[best], r_b[best])) best = v;
  }
  return best;
}

Plan a1_plan(const AgentView& view, const BitString& received) {
  const std::size_t n = view.graph().node_count();
  auto own = a1_encode(view).payload();
  auto other = a1_decode(received, n);
  Vertex target = view.self() == Agent::kA ? a1_target(own, other) : a1_target(other, own);

  Plan plan{view.start(), {}};
  plan.walk(view.graph(), view.start(), shortest_path(view.graph(), view.weights(), view.start(), target));
  return plan;
}

// ---------------------------------------------------------------------------
// A2

std::string_view to_string(A2Exchange mode) {
  return mode == A2Exchange::kSingleShot ? "single-shot" : "two-round";
}

std::optional<A2Exchange> parse_a2_exchange(std::string_view text) {
  if (text == "single-shot") return A2Exchange::kSingleShot;
  if (text == "two-round") return A2Exchange::kTwoRound;
  return std::nullopt;
}

int a2_radius(std::size_t n) {
  return n <= 1 ? 0 : static_cast<int>(std::bit_width(static_cast<std::uint64_t>(n - 1)));
}

int a2_center(const AgentView& view) {
  Weight m = bottleneck_threshold(view.graph(), view.weights(), view.s_a(), view.s_b());
  return interval_index(std::max<Weight>(m, 1));
}

std::vector<std::uint64_t> a2_band_counts(const AgentView& view) {
  std::vector<std::uint64_t> counts;
  for (Weight w : view.weights().values()) {
    auto j = static_cast<std::size_t>(interval_index(w));
    if (counts.size() <= j) counts.resize(j + 1, 0);
    ++counts[j];
  }
  return counts;
}

namespace {

std::uint64_t count_at(const std::vector<std::uint64_t>& counts, int j) {
  return j < 0 || static_cast<std::size_t>(j) >= counts.size() ? 0 : counts[j];
}

std::uint64_t count_below(const std::vector<std::uint64_t>& counts, int j) {
  std::uint64_t total = 0;
  for (int i = 0; i < j && static_cast<std::size_t>(i) < counts.size(); ++i) total += counts[i];
  return total;
}

unsigned count_width(const AgentView& view) { return fixed_width(view.graph().edge_count()); }

// The single-shot message decoded: counts of intervals lo .. lo+3r.
struct WideWindow {
  int center;
  int lo;
  std::vector<std::uint64_t> counts;
  std::uint64_t below;
};

WideWindow decode_single_shot(const BitString& bits, int radius, unsigned width) {
  BitReader reader(bits);
  WideWindow w;
  w.center = static_cast<int>(reader.gamma());
  w.lo = w.center - 2 * radius;
  w.counts.resize(3 * radius + 1);
  for (auto& c : w.counts) c = reader.fixed(width);
  w.below = reader.fixed(width);
  reader.expect_end();
  return w;
}

// Window of the sender centered as close to c as its message allows. When
// the sender's own center is within the radius of c this is exactly the
// window at c; otherwise it is the lowest window the sender transmitted.
A2Window narrow(const WideWindow& wide, int c, int radius) {
  A2Window out;
  out.radius = radius;
  out.center = std::max(c, wide.center - radius);
  const int offset = out.center - radius - wide.lo;
  out.below = wide.below;
  for (int i = 0; i < offset; ++i) out.below += wide.counts[i];
  out.counts.assign(wide.counts.begin() + offset, wide.counts.begin() + offset + 2 * radius + 1);
  return out;
}

int decode_round1(const BitString& bits) {
  BitReader reader(bits);
  auto c = reader.gamma();
  reader.expect_end();
  return static_cast<int>(c);
}

A2Window decode_round2(const BitString& bits, int c, int radius, unsigned width) {
  BitReader reader(bits);
  A2Window w;
  w.center = c;
  w.radius = radius;
  w.counts.resize(2 * radius + 1);
  for (auto& x : w.counts) x = reader.fixed(width);
  w.below = reader.fixed(width);
  reader.expect_end();
  return w;
}

Vertex choose_target(const Graph& graph, Vertex s_a, Vertex s_b, const TildeWeights& tilde_a,
                     const TildeWeights& tilde_b) {
  auto distances = [&](const TildeWeights& tilde, Vertex source) {
    std::vector<EdgeIndex> kept;
    std::vector<Weight> weights;
    for (EdgeIndex e = 0; e < tilde.band.size(); ++e) {
      if (tilde.band[e] == Band::kDeleted) continue;
      kept.push_back(e);
      weights.push_back(tilde.doubled[e]);
    }
    return distances_from(graph.subgraph(kept), weights, source);
  };
  auto da = distances(tilde_a, s_a);
  auto db = distances(tilde_b, s_b);

  std::optional<Vertex> best;
  Weight best_time = kUnreachable;
  for (Vertex v = 0; v < graph.node_count(); ++v) {
    if (da[v] == kUnreachable || db[v] == kUnreachable) continue;
    Weight t = std::max(da[v], db[v]);
    if (!best || t < best_time) {
      best = v;
      best_time = t;
    }
  }
  if (!best) throw std::logic_error("no node is reachable under both reconstructed weight functions");
  return *best;
}

A2Picture assemble(const AgentView& view, A2Window window_a, A2Window window_b) {
  A2Picture p;
  auto sorted = sorted_edges(view.weights());
  p.tilde_a = a2_reconstruct(sorted, window_a);
  p.tilde_b = a2_reconstruct(sorted, window_b);
  p.window_a = std::move(window_a);
  p.window_b = std::move(window_b);
  p.target = choose_target(view.graph(), view.s_a(), view.s_b(), p.tilde_a, p.tilde_b);
  return p;
}

Plan walk_to(const AgentView& view, Vertex target) {
  Plan plan{view.start(), {}};
  plan.walk(view.graph(), view.start(), shortest_path(view.graph(), view.weights(), view.start(), target));
  return plan;
}

}  // namespace

A2Window a2_window_at(const std::vector<std::uint64_t>& band_counts, int center, int radius) {
  A2Window w;
  w.center = center;
  w.radius = radius;
  for (int j = center - radius; j <= center + radius; ++j) w.counts.push_back(count_at(band_counts, j));
  w.below = count_below(band_counts, center - radius);
  return w;
}

TildeWeights a2_reconstruct(const std::vector<EdgeIndex>& sorted, const A2Window& window) {
  const std::size_t m = sorted.size();
  TildeWeights t;
  t.doubled.assign(m, 0);
  t.band.assign(m, Band::kDeleted);

  if (window.below > m) throw MalformedMessage("A2 counts exceed the number of edges");
  std::size_t pos = 0;
  for (; pos < window.below; ++pos) t.band[sorted[pos]] = Band::kZero;
  for (std::size_t i = 0; i < window.counts.size(); ++i) {
    const int j = window.center - window.radius + static_cast<int>(i);
    const std::uint64_t count = window.counts[i];
    if (j < 0) {
      if (count != 0) throw MalformedMessage("A2 count for a negative interval");
      continue;
    }
    if (count > m - pos) throw MalformedMessage("A2 counts exceed the number of edges");
    for (std::uint64_t k = 0; k < count; ++k, ++pos) {
      t.band[sorted[pos]] = Band::kScaled;
      t.doubled[sorted[pos]] = Weight{1} << j;
    }
  }
  return t;
}

Message a2_encode(const AgentView& view) {
  const int r = a2_radius(view.graph().node_count());
  const int c = a2_center(view);
  const unsigned width = count_width(view);
  auto counts = a2_band_counts(view);
  Message m;
  m.add_gamma(static_cast<std::uint64_t>(c));
  for (int j = c - 2 * r; j <= c + r; ++j) m.add_fixed(count_at(counts, j), width);
  m.add_fixed(count_below(counts, c - 2 * r), width);
  return m;
}

A2Picture a2_picture(const AgentView& view, const BitString& received) {
  const int r = a2_radius(view.graph().node_count());
  const unsigned width = count_width(view);
  WideWindow own = decode_single_shot(a2_encode(view).bits(), r, width);
  WideWindow other = decode_single_shot(received, r, width);
  const int c = std::min(own.center, other.center);
  A2Window mine = narrow(own, c, r);
  A2Window theirs = narrow(other, c, r);
  return view.self() == Agent::kA ? assemble(view, std::move(mine), std::move(theirs))
                                  : assemble(view, std::move(theirs), std::move(mine));
}

Plan a2_plan(const AgentView& view, const BitString& received) {
  return walk_to(view, a2_picture(view, received).target);
}

Message a2_encode_round1(const AgentView& view) {
  Message m;
  m.add_gamma(static_cast<std::uint64_t>(a2_center(view)));
  return m;
}

Message a2_encode_round2(const AgentView& view, const BitString& other_round1) {
  const int r = a2_radius(view.graph().node_count());
  const int c = std::min(a2_center(view), decode_round1(other_round1));
  const unsigned width = count_width(view);
  A2Window w = a2_window_at(a2_band_counts(view), c, r);
  Message m;
  for (auto count : w.counts) m.add_fixed(count, width);
  m.add_fixed(w.below, width);
  return m;
}

A2Picture a2_picture_two_round(const AgentView& view, const BitString& other_round1,
                               const BitString& other_round2) {
  const int r = a2_radius(view.graph().node_count());
  const unsigned width = count_width(view);
  const int c = std::min(a2_center(view), decode_round1(other_round1));
  A2Window mine = decode_round2(a2_encode_round2(view, other_round1).bits(), c, r, width);
  A2Window theirs = decode_round2(other_round2, c, r, width);
  return view.self() == Agent::kA ? assemble(view, std::move(mine), std::move(theirs))
                                  : assemble(view, std::move(theirs), std::move(mine));
}

Plan a2_plan_two_round(const AgentView& view, const BitString& other_round1, const BitString& other_round2) {
  return walk_to(view, a2_picture_two_round(view, other_round1, other_round2).target);
}

// ---------------------------------------------------------------------------
// A3

bool a3_goes_and_returns(const AgentView& view) {
  return view.graph().id(view.start()) < view.graph().id(view.other_start());
}

Plan a3_plan(const AgentView& view) { return a3_plan_lambda(view, Rational(1)); }

Plan a3_plan_lambda(const AgentView& view, const Rational& lambda) {
  if (lambda < Rational(1)) throw std::invalid_argument("lambda must be at least 1");
  const Graph& g = view.graph();
  Weight t = dist(g, view.weights(), view.s_a(), view.s_b());
  auto path = shortest_path(g, view.weights(), view.start(), view.other_start());

  Plan plan{view.start(), {}};
  plan.wait((lambda * Rational(t)).ceil());
  Vertex at = plan.walk(g, view.start(), path);
  if (a3_goes_and_returns(view)) plan.walk_back(g, at, path);
  return plan;
}

// ---------------------------------------------------------------------------
// A4

Plan a4_plan(const AgentView& view, std::int64_t horizon) {
  const Graph& g = view.graph();
  const std::size_t n = g.node_count();
  auto d = distances_from(g, view.weights().values(), view.start());

  Plan plan{view.start(), {}};
  std::int64_t elapsed = 0;
  for (std::int64_t x = 1; elapsed < horizon; x *= 2) {
    for (Vertex v = 0; v < n && elapsed < horizon; ++v) {
      if (d[v] <= x) {
        auto path = shortest_path(g, view.weights(), view.start(), v);
        Vertex at = plan.walk(g, view.start(), path);
        plan.wait(x - d[v]);
        plan.walk_back(g, at, path);
        plan.wait(x - d[v]);
      } else {
        plan.wait(2 * x);
      }
      elapsed += 2 * x;
    }
  }
  return plan;
}

std::int64_t a4_stage_start(std::size_t n, int phase, std::size_t stage) {
  const std::int64_t x = std::int64_t{1} << phase;
  return 2 * static_cast<std::int64_t>(n) * (x - 1) + 2 * x * static_cast<std::int64_t>(stage);
}

}  // namespace rdv
