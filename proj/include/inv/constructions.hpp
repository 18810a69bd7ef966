#pragma once

#include <cstdint>
#include <vector>

#include "inv/digraph.hpp"
#include "inv/f2matrix.hpp"

namespace inv {

// Directed 3-cycle 0->1->2->0.
Digraph c3();

// Transitive tournament with i->j iff i<j.
Digraph transitive(int n);

// Disjoint copies of the factors, numbered consecutively in order, plus all
// edges from factor i to factor j for i<j.
Digraph kjoin(const std::vector<Digraph>& factors);

inline Digraph dijoin(const Digraph& l, const Digraph& r) { return kjoin({l, r}); }

// Transitive tournament on {0,1,2,3} plus apex 4 with edges 4->0, 1->4,
// 4->2, 3->4.
Digraph v5();

// Tournament on 9 vertices (1-based [9] shifted to 0..8): with A = {0,2},
// B = {3,5}, C = {6,8}, the edge {i,j} with i<j points j->i iff i and j both
// lie in A u B u C but not both within the same block; otherwise i->j.
Digraph counterexample_r();

// Tournament on 0..n-1 (shift of [n]): i<j gives i->j except j = i+1, which
// gives j->i.
Digraph qn(int n);

// k + n vertices: u_0..u_{k-1} first, then v_0..v_{n-1}. Edges v_i->v_j for
// i<j; u_i->v_j iff bit i of j is 0, else v_j->u_i; no edges among the u_i.
// Requires n divisible by 2^k.
Digraph tau_construction(int k, int n);

// Each of the n(n-1)/2 orientations drawn independently from the seeded
// splitmix64 bit stream, pairs in row-major order over i<j; a 0 bit keeps
// the edge i->j, a 1 bit reverses it.
Digraph random_tournament(int n, std::uint64_t seed);

// Each of the n(n+1)/2 free bits drawn from the same stream, entries in
// row-major order over i<=j.
SymMatrixF2 random_sym_matrix(int n, std::uint64_t seed);

}  // namespace inv
