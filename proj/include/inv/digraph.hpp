#pragma once

#include <optional>
#include <vector>

#include "inv/bitvec.hpp"

namespace inv {

// Total order on all vertices, least first.
struct TotalOrder {
  std::vector<int> perm;
  bool operator==(const TotalOrder&) const = default;
};

// Sorted ascending, no duplicates.
using VertexList = std::vector<int>;

// Ordered list of vertex sets to invert; empty sets permitted.
struct InversionFamily {
  std::vector<VertexList> sets;
  int size() const { return static_cast<int>(sets.size()); }
  bool operator==(const InversionFamily&) const = default;
};

// Loopless, digon-free directed graph on vertices 0..n-1 stored as a dense
// bit adjacency matrix: out_row(i).test(j) iff edge i->j. Tournaments are the
// complete special case.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n) : n_(n), out_(n, BitVec(n)), in_(n, BitVec(n)) {}

  int n() const { return n_; }

  bool has_edge(int u, int v) const { return out_[u].test(v); }
  bool has_pair(int u, int v) const { return has_edge(u, v) || has_edge(v, u); }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  // Reverses the existing edge u->v.
  void flip_edge(int u, int v);

  const BitVec& out_row(int u) const { return out_[u]; }
  const BitVec& in_row(int u) const { return in_[u]; }

  bool is_tournament() const;
  int edge_count() const;

  // Induced subgraph on the given vertices, relabelled 0..keep.size()-1 in
  // the order given.
  Digraph induced(const VertexList& keep) const;
  // Induced subgraph on {0..m-1}; labels unchanged.
  Digraph prefix(int m) const;

  bool operator==(const Digraph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<BitVec> out_, in_;
};

// Kahn peeling; ties broken by smallest vertex index, so for a transitive
// tournament the result is the unique associated order.
std::optional<TotalOrder> is_acyclic(const Digraph& d);
// Same, restricted to the vertices in `alive` (labels unchanged).
std::optional<std::vector<int>> acyclic_order_within(const Digraph& d, const BitVec& alive);

bool is_transitive_tournament(const Digraph& d);

// Characteristic vector of v across the k sets of f: bit i = 1 iff v is in
// set i.
BitVec charvec(int v, const InversionFamily& f);
// All characteristic vectors at once; validates set members against d.
std::vector<BitVec> charvecs(const Digraph& d, const InversionFamily& f);

struct Atom {
  BitVec vec;
  VertexList members;
};
// Partition of V(d) by characteristic vector, sorted by vector value.
std::vector<Atom> atoms(const Digraph& d, const InversionFamily& f);

// Applies all inversions at once: the edge between u and v reverses iff the
// characteristic vectors of u and v have odd dot product. Non-edges never
// gain edges.
Digraph invert_family(const Digraph& d, const InversionFamily& f);

bool is_decycling(const Digraph& d, const InversionFamily& f);

// Extends a decycling family of d minus v to one of d by appending A u {v}
// and A, where A is the out-neighbourhood of v in d. The sets of f use d's
// vertex labels and must avoid v.
InversionFamily solve_vertex(const Digraph& d, int v, const InversionFamily& f);

// Tournament containing d on the same vertex set for which f is still a
// decycling family.
Digraph extend_to_tournament(const Digraph& d, const InversionFamily& f);

VertexList mask_to_list(const BitVec& mask);
BitVec list_to_mask(const VertexList& list, int n);

}  // namespace inv
