#include "inv/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <vector>

#include "inv/constructions.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace inv {
namespace {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Number of bits of n! (exact; limb-by-limb multiplication).
long factorial_bit_length(int n) {
  std::vector<std::uint32_t> limbs{1};
  for (int i = 2; i <= n; ++i) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * i + carry;
      limb = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    while (carry) {
      limbs.push_back(static_cast<std::uint32_t>(carry));
      carry >>= 32;
    }
  }
  const std::uint32_t top = limbs.back();
  return static_cast<long>(limbs.size() - 1) * 32 + (32 - std::countl_zero(top));
}

// largest m with n + 1 <= 2^(n - m), i.e. floor(n - log2(n+1))
int floor_n_minus_log(int n) {
  int e = 0;
  while ((std::uint64_t{1} << e) < static_cast<std::uint64_t>(n) + 1) ++e;
  return n - e;
}

double log2_factorial(int n) {
  double s = 0.0;
  for (int i = 2; i <= n; ++i) s += std::log2(static_cast<double>(i));
  return s;
}

}  // namespace

int counting_lower_bound(int n) {
  if (n < 1) throw std::invalid_argument("counting_lower_bound: n must be positive");
  // 2^(n(n-1)/2) > n! * 2^(n(k-1))  <=>  n(n-1)/2 - n(k-1) >= bitlen(n!)
  const long pairs = static_cast<long>(n) * (n - 1) / 2;
  const long fact_bits = factorial_bit_length(n);
  int k = 0;
  while (pairs - static_cast<long>(n) * ((k + 1) - 1) >= fact_bits) ++k;
  return k;
}

int upper_bound(int n) {
  if (n < 1) throw std::invalid_argument("upper_bound: n must be positive");
  static constexpr int base[] = {0, 0, 0, 1, 1, 2, 2};  // 1-indexed through n = 6
  std::vector<int> memo(static_cast<std::size_t>(n) + 1, -1);
  auto ub = [&](auto&& self, int m) -> int {
    if (m <= 6) return base[m];
    if (memo[m] >= 0) return memo[m];
    const int chain = self(self, m - 1) + 1;
    // floor((m-1)/2) solved vertices plus the larger side; ceil((m-1)/2) = m/2
    const int halving = (m - 1) / 2 + self(self, m / 2);
    const int log_bound = floor_n_minus_log(m);
    return memo[m] = std::min({chain, halving, log_bound});
  };
  return ub(ub, n);
}

BoundReport bounds_for(int n) {
  BoundReport r;
  r.n = n;
  r.lower = counting_lower_bound(n);
  r.upper = upper_bound(n);
  r.lower_note = "counting: largest k with 2^(n(n-1)/2) > n! * 2^(n(k-1))";
  std::ostringstream up;
  if (n <= 6) {
    up << "exact small case";
  } else {
    up << "min of chain = " << upper_bound(n - 1) + 1
       << ", halving = " << (n - 1) / 2 + upper_bound(n / 2)
       << ", n - log2(n+1) = " << floor_n_minus_log(n);
  }
  r.upper_note = up.str();
  return r;
}

double rank_tail_bound(int n, int s) {
  if (n < 1 || s < 0 || s > n) throw std::invalid_argument("rank_tail_bound: need 0 <= s <= n");
  if (s == 0) return 1.0;
  const double exponent =
      s * std::log2(static_cast<double>(n)) - static_cast<double>(s) * (s - 1) / 2.0;
  if (exponent >= 0.0) return 1.0;
  return std::exp2(exponent);
}

ExperimentResult rank_tail_experiment(int n, int s, std::uint64_t trials, std::uint64_t seed,
                                      bool exhaustive, int threads) {
  if (n < 1 || s < 0 || s > n) throw std::invalid_argument("rank_tail_experiment: bad parameters");
  ExperimentResult res;
  res.bound = rank_tail_bound(n, s);
  const int nthreads = resolve_threads(threads);
  if (exhaustive) {
    const int bits = n * (n + 1) / 2;
    if (bits > 22) throw guard_exceeded("rank_tail_experiment: space too large to enumerate");
    const std::uint64_t total = std::uint64_t{1} << bits;
    std::uint64_t hits = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(nthreads) reduction(+ : hits)
#endif
    for (long long pattern = 0; pattern < static_cast<long long>(total); ++pattern) {
      SymMatrixBuilder b(n);
      int bit = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) b.set(i, j, (pattern >> bit++) & 1);
      if (rank(std::move(b).seal()) <= n - s) ++hits;
    }
    res.exact = true;
    res.successes = hits;
    res.trials = total;
    res.empirical = static_cast<double>(hits) / static_cast<double>(total);
    return res;
  }
  if (trials < 1) throw std::invalid_argument("rank_tail_experiment: trials must be positive");
  std::uint64_t hits = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(nthreads) reduction(+ : hits)
#endif
  for (long long t = 0; t < static_cast<long long>(trials); ++t) {
    if (rank(random_sym_matrix(n, seed ^ static_cast<std::uint64_t>(t))) <= n - s) ++hits;
  }
  res.successes = hits;
  res.trials = trials;
  res.empirical = static_cast<double>(hits) / static_cast<double>(trials);
  return res;
}

ExperimentResult random_inv_experiment(int n, int k, std::uint64_t trials, std::uint64_t seed,
                                       bool exhaustive, int threads, const SolveOptions& solve) {
  if (n < 0 || k < 0) throw std::invalid_argument("random_inv_experiment: bad parameters");
  ExperimentResult res;
  {
    // there are at most n! * 2^(n*k) labelled k-invertible tournaments
    const double log_bound = log2_factorial(n) + static_cast<double>(n) * k -
                             static_cast<double>(n) * (n - 1) / 2.0;
    res.bound = log_bound >= 0.0 ? 1.0 : std::exp2(log_bound);
  }
  const int nthreads = resolve_threads(threads);
  if (exhaustive) {
    const int pairs = n * (n - 1) / 2;
    if (pairs > 22) throw guard_exceeded("random_inv_experiment: space too large to enumerate");
    const std::uint64_t total = std::uint64_t{1} << pairs;
    std::uint64_t hits = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256) num_threads(nthreads) reduction(+ : hits)
#endif
    for (long long pattern = 0; pattern < static_cast<long long>(total); ++pattern) {
      Digraph d(n);
      int bit = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if ((pattern >> bit++) & 1)
            d.add_edge(j, i);
          else
            d.add_edge(i, j);
        }
      if (decide_inv_le_serial(d, k, solve)) ++hits;
    }
    res.exact = true;
    res.successes = hits;
    res.trials = total;
    res.empirical = static_cast<double>(hits) / static_cast<double>(total);
    return res;
  }
  if (trials < 1) throw std::invalid_argument("random_inv_experiment: trials must be positive");
  std::uint64_t hits = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(nthreads) reduction(+ : hits)
#endif
  for (long long t = 0; t < static_cast<long long>(trials); ++t) {
    Digraph d = random_tournament(n, seed ^ static_cast<std::uint64_t>(t));
    if (decide_inv_le_serial(d, k, solve)) ++hits;
  }
  res.successes = hits;
  res.trials = trials;
  res.empirical = static_cast<double>(hits) / static_cast<double>(trials);
  return res;
}

RankCertificate rank_certificate(const Digraph& t, const InversionFamily& f) {
  auto cv = charvecs(t, f);
  const int n = t.n();
  SymMatrixBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) b.set(i, j, dot(cv[i], cv[j]) == 1);
  SymMatrixF2 m = std::move(b).seal();
  const int r = rank(m);
  return {std::move(m), r};
}

int min_rank_free_diagonal(const SymMatrixF2& off, const SolveOptions& opt) {
  const int n = static_cast<int>(off.n());
  if (!opt.accept_long_runtimes && n > 20)
    throw guard_exceeded("min_rank_free_diagonal: n exceeds the diagonal enumeration guard");
  if (n > 25) throw guard_exceeded("min_rank_free_diagonal: n too large");
  int best = n;
  for (std::uint64_t diag = 0; diag < (std::uint64_t{1} << n); ++diag) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j)
        if (i != j && off.at(i, j)) m.set(i, j);
      if ((diag >> i) & 1) m.set(i, i);
    }
    best = std::min(best, rank(std::move(m)));
    if (best == 0) break;
  }
  return best;
}

}  // namespace inv
