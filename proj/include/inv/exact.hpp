#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "inv/digraph.hpp"
#include "inv/errors.hpp"

namespace inv {

// One vector of F_2^k per vertex; the induced family X_i = {v : bit i of
// vecs[v]} reproduces the vectors via charvec.
struct VectorAssignment {
  int k = 0;
  std::vector<BitVec> vecs;
  InversionFamily to_family() const;
};

struct SolveOptions {
  // Explore only coordinate-first-use canonical assignments (quotient by
  // permutations of the k coordinates). Never changes the yes/no answer or
  // the reported witness, only the work done.
  bool prune_symmetry = true;
  // 0 means use all hardware threads. The reported witness is the
  // lexicographically smallest accepting assignment (vectors read in vertex
  // order) regardless of thread count.
  int threads = 1;
  // Overrides the size guards below.
  bool accept_long_runtimes = false;
  int guard_kn = 36;          // vector searches: k*n
  int guard_tau_n = 24;       // cycle transversal subset search
  int guard_tau_prime_n = 22; // cycle edge-transversal subset DP
};

// Decycling family of size exactly k (padded with empty sets) if
// inv(d) <= k, otherwise nullopt. Backtracking over vertex vectors in index
// order with incremental acyclicity pruning.
std::optional<InversionFamily> decide_inv_le(const Digraph& d, int k, const SolveOptions& opt = {});

// Single-threaded reference implementation; identical results.
std::optional<InversionFamily> decide_inv_le_serial(const Digraph& d, int k,
                                                    const SolveOptions& opt = {});

struct InvNumber {
  int value = 0;
  InversionFamily family;
};

// Smallest k <= max_k with decide_inv_le succeeding plus its witness;
// nullopt means "exceeds max_k" (a result, never an error).
std::optional<InvNumber> inversion_number(const Digraph& d, int max_k,
                                          const SolveOptions& opt = {});

// Every assignment whose induced family decycles d, each exactly once, in
// lexicographic order (vectors read in vertex order). No symmetry pruning.
void enumerate_decycling_assignments(const Digraph& d, int k,
                                     const std::function<void(const VectorAssignment&)>& sink,
                                     const SolveOptions& opt = {});

// Least k <= max_k such that some assignment into F_2^k flips exactly the
// disagreement set between the two tournaments; nullopt if it exceeds max_k.
std::optional<InvNumber> inversion_distance(const Digraph& t, const Digraph& t2, int max_k,
                                            const SolveOptions& opt = {});

struct TauResult {
  int value = 0;
  VertexList transversal;
};

// Minimum-size vertex set whose deletion leaves d acyclic, by
// increasing-size subset search.
TauResult tau(const Digraph& d, const SolveOptions& opt = {});

struct TauPrimeResult {
  int value = 0;
  std::vector<std::pair<int, int>> edges;
};

// Minimum-size edge set whose removal leaves d acyclic (exact, via the
// subset DP over vertex orderings).
TauPrimeResult tau_prime(const Digraph& d, const SolveOptions& opt = {});

}  // namespace inv
