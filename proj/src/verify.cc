#include "rdv/verify.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rdv/generators.h"
#include "rdv/harness.h"
#include "rdv/instance_io.h"
#include "rdv/oracle.h"
#include "rdv/simulator.h"

namespace rdv {
namespace {

// Collects the outcome of one check; the first failure keeps its instance.
class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void count() { ++result_.cases; }

  void fail(const Instance& instance, const std::string& why) {
    if (!result_.passed) return;
    result_.passed = false;
    failure_ = why;
    result_.witness = write_instance(instance);
  }

  void note_ratio(const Rational& ratio) { worst_ = max(worst_, ratio); }
  const Rational& worst() const { return worst_; }

  CheckResult finish(const std::string& summary) {
    std::ostringstream out;
    out << summary;
    if (!result_.passed) out << (summary.empty() ? "" : "; ") << "first failure: " << failure_;
    result_.detail = out.str();
    return result_;
  }

 private:
  CheckResult result_;
  std::string failure_;
  Rational worst_{0};
};

std::string ratio_text(const Rational& r) {
  std::ostringstream out;
  out << r << " (" << r.to_double() << ")";
  return out.str();
}

std::vector<Instance> random_suite(const SuiteOptions& o, std::optional<InstanceClass> only) {
  std::vector<Instance> out;
  out.reserve(o.random_count);
  for (std::size_t i = 0; i < o.random_count; ++i) {
    const std::uint64_t seed = o.first_seed + i;
    InstanceClass cls = only.value_or(static_cast<InstanceClass>(seed % 3));
    out.push_back(suite_instance(seed, cls, o.max_n, o.max_weight));
  }
  return out;
}

std::vector<std::pair<std::string, Instance>> path_suite(const SuiteOptions& o) {
  std::vector<std::pair<std::string, Instance>> out;
  for (int k : o.path_k) {
    for (int j = 1; j <= k; ++j) {
      out.emplace_back("k=" + std::to_string(k) + " j=" + std::to_string(j), gen_path_family({k, j}));
    }
  }
  return out;
}

bool on_path(const Location& loc, int k, int j) {
  if (const auto* v = std::get_if<Vertex>(&loc)) {
    if (*v <= 1) return true;  // s_A and s_B lie on every path
    auto interior = path_family_interior(k, j);
    return std::find(interior.begin(), interior.end(), *v) != interior.end();
  }
  auto edges = path_family_edges(k, j);
  return std::find(edges.begin(), edges.end(), std::get<EdgePoint>(loc).edge) != edges.end();
}

}  // namespace

CheckResult check_offline_sandwich(const SuiteOptions& options) {
  Tally tally("offline sandwich t_opt <= rv_time <= 2 t_opt");
  for (const Instance& inst : random_suite(options, std::nullopt)) {
    tally.count();
    OfflineResult r = t_opt_exact(inst);
    const Rational rv(r.rv_time);
    if (!(r.t_opt <= rv && rv <= Rational(2) * r.t_opt)) {
      tally.fail(inst, "t_opt " + r.t_opt.to_string() + " rv_time " + rv.to_string());
    }
    tally.note_ratio(rv / r.t_opt);
  }
  return tally.finish("max rv_time/t_opt " + ratio_text(tally.worst()));
}

CheckResult check_a1(const SuiteOptions& options) {
  Tally tally("a1-arbitrary: time <= 4 t_opt, shared target, bits");
  for (const Instance& inst : random_suite(options, std::nullopt)) {
    tally.count();
    ProtocolRun run = run_protocol(inst, ProtocolId::kA1Arbitrary);
    if (!run.report.met) {
      tally.fail(inst, "no meeting");
      continue;
    }
    const Rational ratio = run.report.time / run.offline.t_opt;
    tally.note_ratio(ratio);
    if (ratio > Rational(4)) tally.fail(inst, "ratio " + ratio.to_string());
    if (run.plan_a.final_node(inst.graph) != run.plan_b.final_node(inst.graph)) {
      tally.fail(inst, "agents head to different nodes");
    }
    for (Agent k : {Agent::kA, Agent::kB}) {
      auto d = distances_from(inst.graph, inst.weights(k).values(), inst.start(k));
      const Weight largest = *std::max_element(d.begin(), d.end());
      const auto r_max = static_cast<std::uint64_t>(interval_index(largest));
      const std::size_t bound = inst.graph.node_count() * gamma_length(r_max);
      const std::size_t sent = k == Agent::kA ? run.bits_a : run.bits_b;
      if (sent != message_bits(a1_encode(view_of(inst, k))) || sent > bound) {
        tally.fail(inst, "message of " + std::to_string(sent) + " bits exceeds " + std::to_string(bound));
      }
    }
  }
  return tally.finish("max ratio " + ratio_text(tally.worst()));
}

CheckResult check_a2(const SuiteOptions& options) {
  Tally tally("a2-ordered-edges: time <= 8 t_opt, shared picture, w <= 2 w~, bits");
  RunOptions run_options;
  run_options.a2_exchange = options.a2_exchange;
  double worst_constant = 0.0;

  auto check_one = [&](const Instance& inst) {
    tally.count();
    ProtocolRun run = run_protocol(inst, ProtocolId::kA2OrderedEdges, run_options);
    if (!run.report.met) {
      tally.fail(inst, "no meeting");
      return;
    }
    const Rational ratio = run.report.time / run.offline.t_opt;
    tally.note_ratio(ratio);
    if (ratio > Rational(8)) tally.fail(inst, "ratio " + ratio.to_string());

    auto [seen_by_a, seen_by_b] = a2_pictures(inst, options.a2_exchange);
    if (!(seen_by_a == seen_by_b)) tally.fail(inst, "agents rebuilt different weight pictures");
    if (run.plan_a.final_node(inst.graph) != run.plan_b.final_node(inst.graph)) {
      tally.fail(inst, "agents head to different nodes");
    }
    for (Agent k : {Agent::kA, Agent::kB}) {
      const TildeWeights& tilde = k == Agent::kA ? seen_by_a.tilde_a : seen_by_a.tilde_b;
      const WeightFn& w = inst.weights(k);
      for (EdgeIndex e = 0; e < w.size(); ++e) {
        if (tilde.band[e] == Band::kScaled && w[e] > tilde.doubled[e]) {
          tally.fail(inst, "w(e) > 2 w~(e) on edge " + std::to_string(e));
        }
      }
    }

    const double n = static_cast<double>(inst.graph.node_count());
    const double m = static_cast<double>(std::max<Weight>(inst.max_weight(), 4));
    const double scale = std::max(1.0, std::log2(std::log2(m))) + std::log2(n) * std::log2(n);
    const double constant = static_cast<double>(run.report.bits) / scale;
    worst_constant = std::max(worst_constant, constant);
    if (constant > options.a2_bits_constant) tally.fail(inst, "bit constant " + std::to_string(constant));
  };

  for (const Instance& inst : random_suite(options, InstanceClass::kOrderedEdges)) check_one(inst);
  for (const auto& [name, inst] : path_suite(options)) check_one(inst);

  std::ostringstream summary;
  summary << "max ratio " << ratio_text(tally.worst()) << ", exchange " << to_string(options.a2_exchange)
          << ", bits <= c*(loglog M + log^2 n) with observed c = " << worst_constant << " (pinned "
          << options.a2_bits_constant << ")";
  return tally.finish(summary.str());
}

CheckResult check_a3(const SuiteOptions& options) {
  Tally tally("a3-ordered-agents: time <= 6 min(T_A,T_B) and <= 12 t_opt, zero bits");
  Rational worst_min{0};
  for (const Instance& inst : random_suite(options, InstanceClass::kOrderedAgents)) {
    tally.count();
    ProtocolRun run = run_protocol(inst, ProtocolId::kA3OrderedAgents);
    if (!run.report.met) {
      tally.fail(inst, "no meeting");
      continue;
    }
    const Weight ta = dist(inst.graph, inst.w_a, inst.s_a, inst.s_b);
    const Weight tb = dist(inst.graph, inst.w_b, inst.s_a, inst.s_b);
    const Rational by_min = run.report.time / Rational(std::min(ta, tb));
    const Rational by_opt = run.report.time / run.offline.t_opt;
    worst_min = max(worst_min, by_min);
    tally.note_ratio(by_opt);
    if (by_min > Rational(6)) tally.fail(inst, "time/min(T_A,T_B) " + by_min.to_string());
    if (by_opt > Rational(12)) tally.fail(inst, "ratio " + by_opt.to_string());
    if (run.report.bits != 0) tally.fail(inst, "bits sent");
  }
  return tally.finish("max time/min(T_A,T_B) " + ratio_text(worst_min) + ", max ratio " +
                      ratio_text(tally.worst()));
}

CheckResult check_a4(const SuiteOptions& options) {
  Tally tally("a4-no-comm: time <= 16 n rv_time, within the guaranteed phase/stage");
  Rational worst_phase{0};
  auto check_one = [&](const Instance& inst) {
    tally.count();
    ProtocolRun run = run_protocol(inst, ProtocolId::kA4NoComm);
    if (!run.report.met) {
      tally.fail(inst, "no meeting");
      return;
    }
    const std::size_t n = inst.graph.node_count();
    const Weight rv = run.offline.rv_time;
    const Rational time = run.report.time;
    const Rational rel = time / Rational(static_cast<Weight>(n) * rv);
    worst_phase = max(worst_phase, rel);
    tally.note_ratio(time / run.offline.t_opt);
    if (rel > Rational(16)) tally.fail(inst, "time/(n rv_time) " + rel.to_string());

    int phase = 0;
    while ((Weight{1} << phase) < rv) ++phase;
    const std::int64_t deadline = a4_stage_start(n, phase, run.offline.rv_node) + (std::int64_t{1} << phase);
    if (time > Rational(deadline)) {
      tally.fail(inst, "met at " + time.to_string() + " after the guaranteed instant " + std::to_string(deadline));
    }
    if (run.report.bits != 0) tally.fail(inst, "bits sent");
  };
  for (const Instance& inst : random_suite(options, std::nullopt)) check_one(inst);
  for (const auto& [name, inst] : path_suite(options)) check_one(inst);
  return tally.finish("max time/(n rv_time) " + ratio_text(worst_phase) + ", max ratio " + ratio_text(tally.worst()));
}

CheckResult check_adversary(const SuiteOptions& options) {
  Tally tally("adversarial K_{2,n} vs a4-no-comm: t_opt = 1, time > n");
  std::ostringstream summary;
  for (std::size_t n : options.adversary_n) {
    tally.count();
    AdversaryOutcome adv = adversary_bipartite(n, ProtocolId::kA4NoComm);
    const Rational t_opt = adv.run.offline.t_opt;
    summary << "n=" << n << ": time " << adv.run.report.time << " t_opt " << t_opt << "; ";
    if (t_opt != Rational(1)) tally.fail(adv.instance, "t_opt " + t_opt.to_string());
    if (!adv.run.report.met) {
      tally.fail(adv.instance, "no meeting");
    } else if (adv.run.report.time <= Rational(static_cast<std::int64_t>(n))) {
      tally.fail(adv.instance, "met at " + adv.run.report.time.to_string());
    }
  }
  return tally.finish(summary.str());
}

CheckResult check_path_family(const SuiteOptions& options) {
  Tally tally("path family: ordered edges, t_opt < 2X, early meetings on H_j");
  std::ostringstream trend;
  trend << "a4 max ratio by k:";
  for (int k : options.path_k) {
    Rational worst_a4{0};
    const Weight x = path_family_x(k);
    const Rational early = Rational(k * x, 2);
    for (int j = 1; j <= k; ++j) {
      tally.count();
      Instance inst = gen_path_family({k, j});
      const std::string tag = "k=" + std::to_string(k) + " j=" + std::to_string(j) + ": ";
      if (!classify(inst).ordered_edges) tally.fail(inst, tag + "not ordered-edges");
      OfflineResult r = t_opt_exact(inst);
      if (!(r.t_opt < Rational(2 * x))) tally.fail(inst, tag + "t_opt " + r.t_opt.to_string());
      if (r.t_opt <= early && !on_path(r.witness.location, k, j)) tally.fail(inst, tag + "witness off H_j");

      OfflineProfile p = offline_profile(inst);
      for (Vertex v = 0; v < inst.graph.node_count(); ++v) {
        if (Rational(p.node_time[v]) <= early && !on_path(v, k, j)) {
          tally.fail(inst, tag + "node " + std::to_string(v) + " reachable early off H_j");
        }
      }
      for (EdgeIndex e = 0; e < inst.graph.edge_count(); ++e) {
        if (p.edge_best[e].time <= early && !on_path(EdgePoint{e, Rational(1, 2)}, k, j)) {
          tally.fail(inst, tag + "edge " + std::to_string(e) + " meets early off H_j");
        }
      }
      for (ProtocolId id : {ProtocolId::kA2OrderedEdges, ProtocolId::kA4NoComm}) {
        ProtocolRun run = run_protocol(inst, id);
        if (run.report.met && run.report.time <= early && !on_path(run.report.point.location, k, j)) {
          tally.fail(inst, tag + std::string(to_string(id)) + " met early off H_j");
        }
        if (id == ProtocolId::kA4NoComm && run.report.met) worst_a4 = max(worst_a4, run.report.time / r.t_opt);
      }
    }
    trend << " k=" << k << " " << worst_a4.to_double();
  }
  return tally.finish(trend.str());
}

CheckResult check_oracle_cross(const SuiteOptions& options) {
  Tally tally("oracle: exact vs grid(resolution) within max-weight/resolution");
  SuiteOptions small = options;
  small.random_count = options.oracle_count;
  small.max_n = options.oracle_max_n;
  Rational worst_gap{0};
  for (const Instance& inst : random_suite(small, std::nullopt)) {
    tally.count();
    const Rational exact = t_opt_exact(inst).t_opt;
    const Rational grid = t_opt_bruteforce(inst, options.oracle_resolution);
    const Rational gap = grid - exact;
    worst_gap = max(worst_gap, gap);
    if (gap < Rational(0) || gap > Rational(inst.max_weight(), options.oracle_resolution)) {
      tally.fail(inst, "exact " + exact.to_string() + " grid " + grid.to_string());
    }
  }

  tally.count();
  Graph edge = Graph::build({0, 1}, {{0, 1}});
  Instance single = Instance::make(edge, 0, 1, WeightFn({1}), WeightFn({3}));
  const Rational t = t_opt_exact(single).t_opt;
  if (t != Rational(3, 4)) tally.fail(single, "single edge (1,3) gives " + t.to_string());
  return tally.finish("max grid-exact gap " + ratio_text(worst_gap));
}

CheckResult check_bench_determinism(const SuiteOptions& options) {
  Tally tally("bench output byte-identical for a fixed seed");
  std::vector<BenchOptions> benches;
  benches.push_back({BenchFamily::kRandom, ProtocolId::kA1Arbitrary, {4, 8, 12}, options.first_seed + 7, 3, {}});
  benches.push_back({BenchFamily::kRandom, ProtocolId::kA2OrderedEdges, {6, 10}, options.first_seed + 3, 2, {}});
  benches.push_back({BenchFamily::kPath, ProtocolId::kA2OrderedEdges, {2, 3}, options.first_seed, 1, {}});
  benches.push_back({BenchFamily::kAdversary, ProtocolId::kA4NoComm, {8, 16}, options.first_seed, 1, {}});
  std::size_t bytes = 0;
  for (const BenchOptions& b : benches) {
    tally.count();
    const std::string first = run_bench(b);
    const std::string second = run_bench(b);
    bytes += first.size();
    if (first != second) {
      tally.fail(gen_path_family({2, 1}), "bench output differs between runs");
    }
  }
  return tally.finish(std::to_string(bytes) + " bytes compared");
}

std::vector<CheckResult> verify_all(const SuiteOptions& options) {
  return {check_offline_sandwich(options), check_a1(options),        check_a2(options),
          check_a3(options),               check_a4(options),        check_adversary(options),
          check_path_family(options),      check_oracle_cross(options), check_bench_determinism(options)};
}

}  // namespace rdv
