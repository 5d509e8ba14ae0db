#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rdv/errors.h"
#include "rdv/generators.h"
#include "rdv/harness.h"
#include "rdv/instance_io.h"
#include "rdv/simulator.h"
#include "rdv/verify.h"

namespace {

enum Exit : int {
  kOk = 0,
  kParseError = 2,
  kClassMismatch = 3,
  kNoMeeting = 4,
  kInvariantViolation = 5,
};

struct Common {
  std::string protocol;  // empty selects the subcommand default
  std::int64_t horizon_multiplier = 16;
  std::uint64_t seed = 0;
  std::string lambda = "1";
  std::string a2_mode = "single-shot";
  std::string out;
};

rdv::ProtocolId protocol_of(const std::string& text, rdv::ProtocolId fallback = rdv::ProtocolId::kA1Arbitrary) {
  if (text.empty()) return fallback;
  auto id = rdv::parse_protocol(text);
  if (!id) throw rdv::ParseError("unknown protocol '" + text + "'");
  return *id;
}

rdv::RunOptions run_options(const Common& c) {
  rdv::RunOptions o;
  try {
    o.lambda = rdv::Rational::parse(c.lambda);
  } catch (const std::logic_error& e) {
    throw rdv::ParseError("bad --lambda '" + c.lambda + "': " + e.what());
  }
  auto mode = rdv::parse_a2_exchange(c.a2_mode);
  if (!mode) throw rdv::ParseError("unknown a2 exchange mode '" + c.a2_mode + "'");
  o.a2_exchange = *mode;
  if (c.horizon_multiplier < 1) throw rdv::ParseError("horizon multiplier must be positive");
  o.horizon_multiplier = c.horizon_multiplier;
  return o;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + out_path);
  file << text;
}

std::vector<bool> parse_bits(const std::string& text) {
  std::vector<bool> bits;
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw rdv::ParseError("bit strings may only contain 0 and 1");
    bits.push_back(ch == '1');
  }
  return bits;
}

int cmd_run(const std::string& instance_path, const Common& c) {
  rdv::Instance instance = rdv::load_instance(instance_path);
  const rdv::ProtocolId id = protocol_of(c.protocol);
  rdv::ProtocolRun run = rdv::run_protocol(instance, id, run_options(c));
  const std::string name = std::filesystem::path(instance_path).stem().string();
  rdv::RunRecord record = rdv::make_record(name, c.seed, instance, id, run);
  emit(c.out, rdv::to_json_text(record));
  if (!record.met) {
    std::cerr << "no meeting before the horizon " << run.horizon << "\n";
    return kNoMeeting;
  }
  if (record.meeting_time < record.t_opt) {
    std::cerr << "meeting time " << record.meeting_time << " is below t_opt " << record.t_opt << "\n";
    return kInvariantViolation;
  }
  return kOk;
}

int cmd_verify(rdv::SuiteOptions suite, const Common& c) {
  suite.first_seed = c.seed;
  suite.a2_exchange = run_options(c).a2_exchange;
  bool all = true;
  std::string witnesses;
  for (const rdv::CheckResult& r : rdv::verify_all(suite)) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  [" << r.cases << " cases]  " << r.detail
              << "\n";
    if (!r.passed) {
      all = false;
      std::cout << "  witness: " << r.witness;
      witnesses += r.witness;
    }
  }
  if (!c.out.empty() && !witnesses.empty()) emit(c.out, witnesses);
  return all ? kOk : kInvariantViolation;
}

int cmd_bench(const std::string& family, const std::vector<std::int64_t>& sweep, std::size_t repeats,
              const Common& c) {
  auto fam = rdv::parse_bench_family(family);
  if (!fam) throw rdv::ParseError("unknown bench family '" + family + "'");
  rdv::BenchOptions b;
  b.family = *fam;
  b.protocol = protocol_of(c.protocol);
  b.sweep = sweep;
  b.seed = c.seed;
  b.repeats = repeats;
  b.run = run_options(c);
  emit(c.out, rdv::run_bench(b));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heterogeneous two-agent rendezvous: simulation, verification and benchmarks"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&common](CLI::App* sub) {
    sub->add_option("--protocol", common.protocol, "a1-arbitrary | a2-ordered-edges | a3-ordered-agents | a4-no-comm");
    sub->add_option("--horizon-multiplier", common.horizon_multiplier, "horizon = multiplier * n * rv_time");
    sub->add_option("--seed", common.seed, "seed (first seed of a suite)");
    sub->add_option("--lambda", common.lambda, "initial wait factor for a3, as p/q");
    sub->add_option("--a2-exchange-mode", common.a2_mode, "single-shot | two-round");
    sub->add_option("--out", common.out, "output file (stdout by default)");
  };

  std::string instance_path;
  CLI::App* run = app.add_subcommand("run", "run one protocol on an instance file");
  run->add_option("--instance", instance_path, "instance file")->required();
  add_common(run);

  rdv::SuiteOptions suite;
  CLI::App* verify = app.add_subcommand("verify", "check every bound over generated suites");
  verify->add_option("--count", suite.random_count, "random instances per suite");
  verify->add_option("--max-n", suite.max_n, "largest random instance");
  verify->add_option("--oracle-count", suite.oracle_count, "instances for the oracle cross-check");
  add_common(verify);

  std::string family = "random";
  std::vector<std::int64_t> sweep{8, 16, 32, 64};
  std::size_t repeats = 4;
  CLI::App* bench = app.add_subcommand("bench", "CSV table of run records over a parameter sweep");
  bench->add_option("--family", family, "random | bipartite | path | adversary");
  bench->add_option("--sweep", sweep, "n values (k for path)")->delimiter(',');
  bench->add_option("--repeats", repeats, "instances per sweep value (random, bipartite)");
  add_common(bench);

  CLI::App* gen = app.add_subcommand("gen", "write a generated instance file");
  gen->require_subcommand(1);
  add_common(gen);

  std::size_t n = 8;
  std::string a_bits;
  std::string b_bits;
  std::int64_t x = 0;
  CLI::App* g_bip = gen->add_subcommand("bipartite", "K_{2,n} with per-edge flags");
  g_bip->add_option("--a", a_bits, "flags of the s_A edges, e.g. 0110")->required();
  g_bip->add_option("--b", b_bits, "flags of the s_B edges")->required();
  g_bip->add_option("--x", x, "large weight (default n)");

  int k = 2;
  int j = 1;
  CLI::App* g_path = gen->add_subcommand("path", "path family member G_j");
  g_path->add_option("--k", k)->required();
  g_path->add_option("--j", j)->required();

  rdv::RandomSpec spec;
  std::string cls = "arbitrary";
  CLI::App* g_rand = gen->add_subcommand("random", "random connected instance");
  g_rand->add_option("--n", spec.n);
  g_rand->add_option("--density", spec.edge_density);
  g_rand->add_option("--class", cls, "arbitrary | ordered-edges | ordered-agents");
  g_rand->add_option("--max-weight", spec.max_weight);

  CLI::App* g_adv = gen->add_subcommand("adversary", "K_{2,n} adversary against a message-free protocol");
  g_adv->add_option("--n", n);
  for (CLI::App* leaf : {g_bip, g_path, g_rand, g_adv}) leaf->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*run) return cmd_run(instance_path, common);
    if (*verify) return cmd_verify(suite, common);
    if (*bench) return cmd_bench(family, sweep, repeats, common);

    rdv::Instance instance = [&]() {
      if (*g_bip) return rdv::gen_bipartite({parse_bits(a_bits), parse_bits(b_bits), x});
      if (*g_path) return rdv::gen_path_family({k, j});
      if (*g_rand) {
        auto c = rdv::parse_instance_class(cls);
        if (!c) throw rdv::ParseError("unknown class '" + cls + "'");
        spec.cls = *c;
        spec.seed = common.seed;
        return rdv::gen_random(spec);
      }
      return rdv::adversary_bipartite(n, protocol_of(common.protocol, rdv::ProtocolId::kA4NoComm),
                                      run_options(common))
          .instance;
    }();
    emit(common.out, rdv::write_instance(instance));
    return kOk;
  } catch (const rdv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const rdv::ClassMismatch& e) {
    std::cerr << "class mismatch: " << e.what() << "\n";
    return kClassMismatch;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvariantViolation;
  }
}
