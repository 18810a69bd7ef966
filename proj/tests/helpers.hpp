#pragma once

#include <cstdint>
#include <vector>

#include "inv/constructions.hpp"
#include "inv/digraph.hpp"
#include "inv/exact.hpp"
#include "inv/rng.hpp"

namespace testutil {

// Independent acyclicity oracle: DFS back-edge detection, no shared code
// with the library's Kahn peeling.
inline bool dfs_has_cycle(const inv::Digraph& d) {
  const int n = d.n();
  std::vector<int> color(n, 0);  // 0 white, 1 grey, 2 black
  std::vector<int> stack, it;
  for (int s = 0; s < n; ++s) {
    if (color[s]) continue;
    stack = {s};
    it = {0};
    color[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      bool advanced = false;
      for (int v = it.back(); v < n; ++v) {
        if (!d.has_edge(u, v)) continue;
        if (color[v] == 1) return true;
        if (color[v] == 0) {
          it.back() = v + 1;
          stack.push_back(v);
          it.push_back(0);
          color[v] = 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        color[u] = 2;
        stack.pop_back();
        it.pop_back();
      }
    }
  }
  return false;
}

// Independent rank oracle over F_2 on a 0/1 matrix.
inline int naive_rank(std::vector<std::vector<int>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = 0; i < rows; ++i)
      if (i != r && m[i][c])
        for (int j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
    ++r;
  }
  return r;
}

// Tournament from the bit pattern used across the test suite: pair (i,j)
// with i<j in row-major order, bit 1 orients j->i.
inline inv::Digraph tournament_from_bits(int n, std::uint64_t bits) {
  inv::Digraph d(n);
  int b = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if ((bits >> b++) & 1)
        d.add_edge(j, i);
      else
        d.add_edge(i, j);
    }
  return d;
}

inline std::uint64_t tournament_count(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

// Digraph from a base-3 pattern: trit 0 = no edge, 1 = i->j, 2 = j->i.
inline inv::Digraph digraph_from_trits(int n, std::uint64_t pattern) {
  inv::Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      switch (pattern % 3) {
        case 1: d.add_edge(i, j); break;
        case 2: d.add_edge(j, i); break;
        default: break;
      }
      pattern /= 3;
    }
  return d;
}

inline std::uint64_t digraph_count(int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n * (n - 1) / 2; ++i) c *= 3;
  return c;
}

inline inv::Digraph random_digraph(int n, std::uint64_t seed, int none_pct = 40) {
  inv::SplitMix64 g(seed);
  inv::Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int roll = static_cast<int>(g.next() % 100);
      if (roll < none_pct) continue;
      if ((roll - none_pct) % 2 == 0)
        d.add_edge(i, j);
      else
        d.add_edge(j, i);
    }
  return d;
}

inline inv::InversionFamily random_family(int n, int k, std::uint64_t seed) {
  inv::SplitMix64 g(seed);
  inv::InversionFamily f;
  f.sets.resize(k);
  for (int i = 0; i < k; ++i)
    for (int v = 0; v < n; ++v)
      if (g.next() & 1) f.sets[i].push_back(v);
  return f;
}

// Exact inversion number by searching k upward; asserts success by `cap`.
inline int exact_inv(const inv::Digraph& d, int cap = 8) {
  inv::SolveOptions opt;
  opt.accept_long_runtimes = true;
  for (int k = 0; k <= cap; ++k)
    if (inv::decide_inv_le_serial(d, k, opt)) return k;
  return -1;
}

}  // namespace testutil
