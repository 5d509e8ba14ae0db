#include "rdv/harness.h"

#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "rdv/generators.h"

namespace rdv {

RunRecord make_record(std::string instance_id, std::uint64_t seed, const Instance& instance, ProtocolId protocol,
                      const ProtocolRun& run) {
  RunRecord r;
  r.instance_id = std::move(instance_id);
  r.protocol = protocol;
  r.met = run.report.met;
  r.meeting_time = run.report.time;
  r.t_opt = run.offline.t_opt;
  r.ratio = run.report.met ? run.report.time / run.offline.t_opt : Rational(0);
  r.bits = run.report.bits;
  r.n = instance.graph.node_count();
  r.edges = instance.graph.edge_count();
  r.max_weight = instance.max_weight();
  r.seed = seed;
  return r;
}

std::string to_json_text(const RunRecord& record) {
  nlohmann::ordered_json doc;
  doc["instance"] = record.instance_id;
  doc["protocol"] = std::string(to_string(record.protocol));
  doc["met"] = record.met;
  doc["meeting_time"] = record.met ? record.meeting_time.to_string() : "";
  doc["t_opt"] = record.t_opt.to_string();
  doc["ratio"] = record.met ? record.ratio.to_string() : "";
  doc["bits"] = record.bits;
  doc["n"] = record.n;
  doc["edges"] = record.edges;
  doc["max_weight"] = record.max_weight;
  doc["seed"] = record.seed;
  return doc.dump(2) + "\n";
}

std::string csv_header() { return "instance,protocol,met,meeting_time,t_opt,ratio,bits,n,edges,max_weight,seed\n"; }

std::string to_csv(const RunRecord& record) {
  std::ostringstream out;
  out << record.instance_id << ',' << to_string(record.protocol) << ',' << (record.met ? 1 : 0) << ','
      << (record.met ? record.meeting_time.to_string() : "") << ',' << record.t_opt << ','
      << (record.met ? record.ratio.to_string() : "") << ',' << record.bits << ',' << record.n << ','
      << record.edges << ',' << record.max_weight << ',' << record.seed << '\n';
  return out.str();
}

namespace {

Instance random_with_n(std::uint64_t seed, InstanceClass cls, std::size_t n, Weight max_weight) {
  // Separate stream for the shape parameters so that gen_random keeps the
  // plain seed.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t pairs = n * (n - 1) / 2;
  const std::size_t m = n - 1 + rng() % (pairs - (n - 1) + 1);
  RandomSpec spec;
  spec.n = n;
  spec.edge_density = static_cast<double>(m) / static_cast<double>(pairs);
  spec.cls = cls;
  spec.max_weight = max_weight;
  spec.seed = seed;
  return gen_random(spec);
}

}  // namespace

Instance suite_instance(std::uint64_t seed, InstanceClass cls, std::size_t max_n, Weight max_weight) {
  if (max_n < 2) throw std::invalid_argument("max_n must be at least 2");
  std::mt19937_64 rng(seed ^ 0x5851f42d4c957f2dULL);
  const std::size_t n = 2 + rng() % (max_n - 1);
  return random_with_n(seed, cls, n, max_weight);
}

std::optional<BenchFamily> parse_bench_family(std::string_view text) {
  if (text == "random") return BenchFamily::kRandom;
  if (text == "bipartite") return BenchFamily::kBipartite;
  if (text == "path") return BenchFamily::kPath;
  if (text == "adversary") return BenchFamily::kAdversary;
  return std::nullopt;
}

std::string run_bench(const BenchOptions& options) {
  std::string out = csv_header();
  std::uint64_t index = 0;
  auto emit = [&](const std::string& id, std::uint64_t seed, const Instance& instance) {
    ProtocolRun run = run_protocol(instance, options.protocol, options.run);
    out += to_csv(make_record(id, seed, instance, options.protocol, run));
  };

  for (std::int64_t param : options.sweep) {
    if (param < 1) throw std::invalid_argument("sweep values must be positive");
    const auto size = static_cast<std::size_t>(param);
    switch (options.family) {
      case BenchFamily::kRandom:
        for (std::size_t r = 0; r < options.repeats; ++r, ++index) {
          const std::uint64_t seed = options.seed + index;
          Instance inst = random_with_n(seed, required_class(options.protocol), std::max<std::size_t>(size, 2), 64);
          emit("random-n" + std::to_string(param) + "-r" + std::to_string(r), seed, inst);
        }
        break;
      case BenchFamily::kBipartite:
        for (std::size_t r = 0; r < options.repeats; ++r, ++index) {
          const std::uint64_t seed = options.seed + index;
          std::mt19937_64 rng(seed);
          BipartiteSpec spec{std::vector<bool>(size), std::vector<bool>(size), 0};
          for (std::size_t j = 0; j < size; ++j) {
            spec.a[j] = (rng() & 1U) != 0;
            spec.b[j] = (rng() & 1U) != 0;
          }
          emit("bipartite-n" + std::to_string(param) + "-r" + std::to_string(r), seed, gen_bipartite(spec));
        }
        break;
      case BenchFamily::kPath:
        for (int j = 1; j <= param; ++j) {
          emit("path-k" + std::to_string(param) + "-j" + std::to_string(j), options.seed,
               gen_path_family({static_cast<int>(param), j}));
        }
        break;
      case BenchFamily::kAdversary: {
        AdversaryOutcome adv = adversary_bipartite(size, options.protocol, options.run);
        out += to_csv(make_record("adversary-n" + std::to_string(param), options.seed, adv.instance,
                                  options.protocol, adv.run));
        break;
      }
    }
  }
  return out;
}

}  // namespace rdv
