#pragma once

#include <cstdint>
#include <string>

#include "inv/digraph.hpp"
#include "inv/errors.hpp"
#include "inv/exact.hpp"
#include "inv/f2matrix.hpp"

namespace inv {

// Largest k with 2^(n(n-1)/2) > n! * 2^(n(k-1)), in exact integer
// arithmetic; every n-vertex tournament class then forces inv(n) >= k.
int counting_lower_bound(int n);

// Best of the known upper-bound recursions: exact small values, the
// solve-one-vertex chain inv(n) <= inv(n-1)+1, the halving recursion
// inv(n) <= floor((n-1)/2) + inv(ceil((n-1)/2)), and
// inv(n) <= floor(n - log2(n+1)).
int upper_bound(int n);

struct BoundReport {
  int n = 0;
  int lower = 0;
  int upper = 0;
  std::string lower_note;
  std::string upper_note;  // all upper-bound paths, not just the winner
};

BoundReport bounds_for(int n);

// min(1, 2^(s*log2(n) - s(s-1)/2)); bounds the probability that a uniformly
// random n x n symmetric matrix over F_2 has rank at most n-s.
double rank_tail_bound(int n, int s);

struct ExperimentResult {
  double empirical = 0.0;
  double bound = 1.0;
  bool exact = false;  // true when the full space was enumerated
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
};

// Fraction of seeded random symmetric matrices with rank <= n-s. Trial t
// draws from seed ^ t, so the result is independent of scheduling. With
// exhaustive = true the full space of 2^(n(n+1)/2) matrices is enumerated
// instead (seed and trials ignored).
ExperimentResult rank_tail_experiment(int n, int s, std::uint64_t trials, std::uint64_t seed,
                                      bool exhaustive = false, int threads = 1);

// Fraction of seeded random n-vertex tournaments with inv <= k; same
// trial-seeding scheme. The bound field is the counting bound
// n! * 2^(n*k) / 2^(n(n-1)/2) on that fraction, clipped at 1.
ExperimentResult random_inv_experiment(int n, int k, std::uint64_t trials, std::uint64_t seed,
                                       bool exhaustive = false, int threads = 1,
                                       const SolveOptions& solve = {});

struct RankCertificate {
  SymMatrixF2 matrix;  // sum over i of the rank-one indicator matrix of X_i
  int rank = 0;        // at most |F|
};

// The off-diagonal of the certificate matrix equals the flip indicator of
// the family, so its rank bounds how many inversions the flip pattern needs.
RankCertificate rank_certificate(const Digraph& t, const InversionFamily& f);

// Minimum rank over all diagonal completions of a symmetric off-diagonal
// pattern; lower-bounds the inversion distance realising that disagreement
// pattern. Enumerates 2^n diagonals (guard n <= 20).
int min_rank_free_diagonal(const SymMatrixF2& off, const SolveOptions& opt = {});

}  // namespace inv
