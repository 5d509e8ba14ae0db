#ifndef RDV_VERIFY_H_
#define RDV_VERIFY_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rdv/graph.h"
#include "rdv/protocols.h"
#include "rdv/rational.h"

namespace rdv {

// Outcome of one bound or invariant checked over a suite of instances.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;   // summary: worst ratio, constants, ...
  std::string witness;  // instance document of the first failing case
};

struct SuiteOptions {
  std::size_t random_count = 500;
  std::size_t max_n = 20;
  Weight max_weight = 64;
  std::uint64_t first_seed = 0;

  std::vector<int> path_k{2, 3, 4, 5, 6};
  std::vector<std::size_t> adversary_n{8, 16, 32, 64};

  std::size_t oracle_count = 200;
  std::size_t oracle_max_n = 8;
  std::int64_t oracle_resolution = 10000;

  A2Exchange a2_exchange = A2Exchange::kSingleShot;
  // Pinned constant for bits <= c * (loglog M + log^2 n) on A2 runs.
  double a2_bits_constant = 24.0;
};

// t_opt <= rv_time <= 2 t_opt on random instances of every class.
CheckResult check_offline_sandwich(const SuiteOptions& options);
// A1: time <= 4 t_opt, both agents head to the same node, per-message bits
// within n * gamma_length(r_max).
CheckResult check_a1(const SuiteOptions& options);
// A2: time <= 8 t_opt on random ordered-edges instances and the path family,
// identical pictures on both sides, w_K <= 2 w~_K on scaled edges, bit
// constant within the pinned bound.
CheckResult check_a2(const SuiteOptions& options);
// A3: time <= 6 min(T_A, T_B) and <= 12 t_opt, zero bits.
CheckResult check_a3(const SuiteOptions& options);
// A4: time <= 16 n rv_time and no later than the stage of the rendezvous node
// in the first phase with 2^p >= rv_time.
CheckResult check_a4(const SuiteOptions& options);
// Adversarial K_{2,n} against A4: t_opt = 1 and meeting time > n.
CheckResult check_adversary(const SuiteOptions& options);
// Path family: ordered edges, t_opt < 2X, early meetings only on H_j.
CheckResult check_path_family(const SuiteOptions& options);
// Exact optimum vs. grid search, plus the closed-form 3/4 single edge.
CheckResult check_oracle_cross(const SuiteOptions& options);
// Two benchmark runs with the same seed produce identical bytes.
CheckResult check_bench_determinism(const SuiteOptions& options);

std::vector<CheckResult> verify_all(const SuiteOptions& options);

}  // namespace rdv

#endif  // RDV_VERIFY_H_
