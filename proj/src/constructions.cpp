#include "inv/constructions.hpp"

#include <stdexcept>

#include "inv/rng.hpp"

namespace inv {

Digraph c3() {
  Digraph d(3);
  d.add_edge(0, 1);
  d.add_edge(1, 2);
  d.add_edge(2, 0);
  return d;
}

Digraph transitive(int n) {
  if (n < 0) throw std::invalid_argument("transitive: n must be non-negative");
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d.add_edge(i, j);
  return d;
}

Digraph kjoin(const std::vector<Digraph>& factors) {
  if (factors.empty()) throw std::invalid_argument("kjoin: needs at least one factor");
  int n = 0;
  for (const auto& f : factors) n += f.n();
  Digraph d(n);
  int off = 0;
  std::vector<int> offsets;
  for (const auto& f : factors) {
    offsets.push_back(off);
    for (int u = 0; u < f.n(); ++u)
      f.out_row(u).for_each_set([&](int v) { d.add_edge(off + u, off + v); });
    off += f.n();
  }
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      for (int u = 0; u < factors[i].n(); ++u)
        for (int v = 0; v < factors[j].n(); ++v) d.add_edge(offsets[i] + u, offsets[j] + v);
  return d;
}

Digraph v5() {
  Digraph d = transitive(4);
  Digraph out(5);
  for (int i = 0; i < 4; ++i)
    d.out_row(i).for_each_set([&](int j) { out.add_edge(i, j); });
  out.add_edge(4, 0);
  out.add_edge(1, 4);
  out.add_edge(4, 2);
  out.add_edge(3, 4);
  return out;
}

Digraph counterexample_r() {
  const int n = 9;
  auto block = [](int v) -> int {
    // A = {0,2} -> 0, B = {3,5} -> 1, C = {6,8} -> 2, otherwise -1
    switch (v) {
      case 0: case 2: return 0;
      case 3: case 5: return 1;
      case 6: case 8: return 2;
      default: return -1;
    }
  };
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool backward = block(i) >= 0 && block(j) >= 0 && block(i) != block(j);
      if (backward)
        d.add_edge(j, i);
      else
        d.add_edge(i, j);
    }
  return d;
}

Digraph qn(int n) {
  if (n < 1) throw std::invalid_argument("qn: n must be at least 1");
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (j == i + 1)
        d.add_edge(j, i);
      else
        d.add_edge(i, j);
    }
  return d;
}

Digraph tau_construction(int k, int n) {
  if (k < 0 || n < 1) throw std::invalid_argument("tau_construction: bad parameters");
  if (k >= 31 || n % (1 << k) != 0)
    throw std::invalid_argument("tau_construction: n must be divisible by 2^k");
  Digraph d(k + n);
  auto v = [&](int j) { return k + j; };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d.add_edge(v(i), v(j));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) {
      if ((j >> i) & 1)
        d.add_edge(v(j), i);
      else
        d.add_edge(i, v(j));
    }
  return d;
}

Digraph random_tournament(int n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("random_tournament: n must be non-negative");
  BitStream bits(seed);
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (bits.next_bit())
        d.add_edge(j, i);
      else
        d.add_edge(i, j);
    }
  return d;
}

SymMatrixF2 random_sym_matrix(int n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("random_sym_matrix: n must be non-negative");
  BitStream bits(seed);
  SymMatrixBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) b.set(i, j, bits.next_bit() != 0);
  return std::move(b).seal();
}

}  // namespace inv
