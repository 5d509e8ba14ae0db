#ifndef RDV_GENERATORS_H_
#define RDV_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rdv/graph.h"
#include "rdv/protocols.h"
#include "rdv/simulator.h"

namespace rdv {

// K_{2,n}: s_A (id 0) and s_B (id 1) are both joined to v_1..v_n (ids
// 2..n+1). Edges s_A-v_j come first, then s_B-v_j.
//
// w_A(s_A v_j) = 1 if a[j] else X, w_A(s_B v_j) = X,
// w_B(s_B v_j) = 1 if b[j] else X, w_B(s_A v_j) = X.
struct BipartiteSpec {
  std::vector<bool> a;
  std::vector<bool> b;
  Weight x = 0;  // 0 selects X = n
};

Instance gen_bipartite(const BipartiteSpec& spec);

// k node-disjoint s_A-s_B paths H_1..H_k of k+2 edges each, on which both
// agents order the edges e_1..e_m identically (m = k^2 + 2k).
//
//   H_p = s_A -e_{k^2+k+p}- . -e_{(p-1)k+1}- ... -e_{pk}- . -e_{k^2+k-p+1}- s_B
//
// w_A(e_i) = X + i with X = k^4, and w_B(e_i) is i for i <= jk, X + i up to
// i = k^2+k-j+1, and kX + i beyond. Edge e_i has edge index i - 1. s_A has
// id 0, s_B id 1, and the interior nodes of H_p are numbered consecutively
// from the s_A side.
struct PathFamilySpec {
  int k = 2;
  int j = 1;
};

Instance gen_path_family(const PathFamilySpec& spec);
Weight path_family_x(int k);
// Edge indices of H_p in order from s_A to s_B.
std::vector<EdgeIndex> path_family_edges(int k, int p);
// Interior vertices of H_p in order from s_A to s_B.
std::vector<Vertex> path_family_interior(int k, int p);

// Builds the K_{2,n} instance against a message-free protocol: w_A is fixed
// (every s_A edge costs 1), agent A's plan is simulated for n time units, and
// the first v_j it never touched becomes the only cheap edge s_B-v_j for B.
struct AdversaryOutcome {
  Instance instance;
  std::size_t chosen = 0;  // j in 1..n
  ProtocolRun run;
};

// Throws std::invalid_argument for a protocol that sends messages.
AdversaryOutcome adversary_bipartite(std::size_t n, ProtocolId protocol, const RunOptions& options = {});

struct RandomSpec {
  std::size_t n = 8;
  double edge_density = 0.5;  // fraction of the n(n-1)/2 possible edges
  InstanceClass cls = InstanceClass::kArbitrary;
  Weight max_weight = 32;
  std::uint64_t seed = 0;
};

// Connected random instance in the requested class; a pure function of the
// spec. Throws std::invalid_argument if the density leaves fewer than n-1
// edges.
Instance gen_random(const RandomSpec& spec);

}  // namespace rdv

#endif  // RDV_GENERATORS_H_
