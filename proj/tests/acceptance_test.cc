// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every tolerance is pinned below.

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "rdv/verify.h"

namespace {

rdv::SuiteOptions pinned_options() {
  rdv::SuiteOptions o;
  o.random_count = 500;  // seeds 0..499
  o.first_seed = 0;
  o.max_n = 20;
  o.max_weight = 64;
  o.path_k = {2, 3, 4, 5, 6};
  o.adversary_n = {8, 16, 32, 64};
  o.oracle_count = 200;
  o.oracle_max_n = 8;
  o.oracle_resolution = 10000;  // grid gap allowed: max weight / resolution
  o.a2_exchange = rdv::A2Exchange::kSingleShot;
  o.a2_bits_constant = 24.0;  // bits <= 24 * (loglog M + log^2 n)
  return o;
}

struct Criterion {
  const char* label;
  std::function<rdv::CheckResult(const rdv::SuiteOptions&)> check;
};

}  // namespace

int main() {
  const rdv::SuiteOptions options = pinned_options();
  const std::vector<Criterion> criteria{
      {"sandwich t_opt <= rv_time <= 2 t_opt", rdv::check_offline_sandwich},
      {"A1 time <= 4 t_opt, shared target, bits", rdv::check_a1},
      {"A2 time <= 8 t_opt, w <= 2 w~, bits constant", rdv::check_a2},
      {"A3 time <= 6 min(T_A,T_B) and <= 12 t_opt, zero bits", rdv::check_a3},
      {"A4 time <= 16 n rv_time, guaranteed phase", rdv::check_a4},
      {"adversarial K_{2,n}: t_opt = 1, A4 time > n", rdv::check_adversary},
      {"path family: ordered edges, t_opt < 2X, early meetings on H_j", rdv::check_path_family},
      {"oracle cross-validation and 3/4 single edge", rdv::check_oracle_cross},
      {"bench determinism", rdv::check_bench_determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    rdv::CheckResult r = c.check(options);
    std::cout << (r.passed ? "PASS" : "FAIL") << " | " << c.label << " | " << r.cases << " cases | " << r.detail
              << "\n";
    if (!r.passed) {
      ++failures;
      std::cout << "  witness instance:\n" << r.witness;
    }
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
