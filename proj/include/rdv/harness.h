#ifndef RDV_HARNESS_H_
#define RDV_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rdv/graph.h"
#include "rdv/protocols.h"
#include "rdv/rational.h"
#include "rdv/simulator.h"

namespace rdv {

// One protocol execution as reported by the CLI and the benchmark tables.
struct RunRecord {
  std::string instance_id;
  ProtocolId protocol = ProtocolId::kA1Arbitrary;
  bool met = false;
  Rational meeting_time;
  Rational t_opt;
  Rational ratio;  // meeting_time / t_opt
  std::size_t bits = 0;
  std::size_t n = 0;
  std::size_t edges = 0;
  Weight max_weight = 0;
  std::uint64_t seed = 0;
};

RunRecord make_record(std::string instance_id, std::uint64_t seed, const Instance& instance, ProtocolId protocol,
                      const ProtocolRun& run);

// JSON object, rationals as "p/q" strings.
std::string to_json_text(const RunRecord& record);
std::string csv_header();
std::string to_csv(const RunRecord& record);

// Random instance used by the verification suites: n in [2, max_n] and the
// edge count drawn from the seed, then gen_random with the same seed.
Instance suite_instance(std::uint64_t seed, InstanceClass cls, std::size_t max_n, Weight max_weight);

enum class BenchFamily { kRandom, kBipartite, kPath, kAdversary };

std::optional<BenchFamily> parse_bench_family(std::string_view text);

struct BenchOptions {
  BenchFamily family = BenchFamily::kRandom;
  ProtocolId protocol = ProtocolId::kA1Arbitrary;
  // n for random/bipartite/adversary, k for path.
  std::vector<std::int64_t> sweep;
  std::uint64_t seed = 0;
  std::size_t repeats = 4;
  RunOptions run;
};

// CSV table, header first. Rows follow sweep order then repeat order.
std::string run_bench(const BenchOptions& options);

}  // namespace rdv

#endif  // RDV_HARNESS_H_
