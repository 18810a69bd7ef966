#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "inv/digraph.hpp"
#include "inv/errors.hpp"
#include "inv/exact.hpp"

namespace inv {

// Triple (a,b,c) with a.b = b.c but a.b != a.c: inverting an ascending
// transitive triple with these characteristic vectors yields a cyclic
// triangle.
bool is_bad_triple(const BitVec& a, const BitVec& b, const BitVec& c);

// One DP state of the compression step: the set of ordered triples of
// characteristic vectors realised by some branch, plus one representative
// assignment (the lexicographically smallest realising it).
struct TripleSet {
  std::vector<std::uint64_t> triples;  // sorted unique, packed (v1,v2,v3)
  std::vector<std::uint8_t> rep;       // free-bit values per processed vertex
};

// State record of a prefix assignment: {(v_a,v_b,v_c) : a < b < c} over the
// full (s+k)-bit vectors, deduplicated, with the free bits (those at index
// >= s) as the representative. Vectors must share one width w with 3w <= 62.
TripleSet triple_set_of(const std::vector<BitVec>& vecs, int s);

struct CompressStats {
  std::vector<std::size_t> live_states;  // after each processed vertex
  std::vector<std::size_t> transitions;  // (state x branch) pairs expanded
};

// Tournament t0 with a known decycling family x of size s and the total
// order of the transitive tournament invert_family(t0, x).
struct CompressionInput {
  Digraph t0;
  InversionFamily x;
  TotalOrder order;
  int k = 0;

  // Validates the invariants; computes the order when not supplied.
  static CompressionInput make(Digraph t0, InversionFamily x, int k,
                               std::optional<TotalOrder> order = std::nullopt);
};

struct CompressResult {
  InversionFamily family;  // size exactly k
  TotalOrder order;        // of the tournament the family transforms t0 into
};

// Lemma-style compression: processes vertices in the order of the transitive
// image, branching over the 2^k free bits per vertex; DP states are keyed by
// their triple sets and states containing a bad triple are discarded as soon
// as they are created. Returns a size-k decycling family of t0 and the order
// of the resulting transitive tournament, or nullopt when t0 is not
// k-invertible.
std::optional<CompressResult> compress(const CompressionInput& in, CompressStats* stats = nullptr,
                                       int threads = 1);

// Order of the transitive tournament obtained by inverting `vecs` in the
// transitive tournament with order `base`: each atom keeps the base order
// (reversed when its vector has self-dot 1) and atom fronts are merged by
// comparing flipped edge orientations.
TotalOrder merge_inverted_order(const TotalOrder& base, const std::vector<BitVec>& vecs);

// Order associated to invert_family(t0, f) for a decycling family f of a
// tournament t0, built by ordering each atom and merging.
TotalOrder reconstruct_order(const Digraph& t0, const InversionFamily& f);

// Iterative compression over vertex prefixes (in index order): a <=k family
// for the prefix is extended by two sets when a vertex is added and
// re-compressed to size k. Returns nullopt when t is not k-invertible.
std::optional<CompressResult> fpt_inversion(const Digraph& t, int k, CompressStats* stats = nullptr,
                                            int threads = 1);

}  // namespace inv
