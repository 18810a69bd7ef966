#include "inv/digraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace inv {

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("Digraph: vertex " + std::to_string(v) + " out of range");
}

void Digraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("Digraph: loops are not allowed");
  if (has_edge(v, u)) throw std::invalid_argument("Digraph: digons are not allowed");
  out_[u].set(v);
  in_[v].set(u);
}

void Digraph::remove_edge(int u, int v) {
  out_[u].set(v, false);
  in_[v].set(u, false);
}

void Digraph::flip_edge(int u, int v) {
  if (!has_edge(u, v)) throw std::invalid_argument("Digraph::flip_edge: no such edge");
  remove_edge(u, v);
  out_[v].set(u);
  in_[u].set(v);
}

bool Digraph::is_tournament() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (!has_pair(i, j)) return false;
  return true;
}

int Digraph::edge_count() const {
  int c = 0;
  for (int i = 0; i < n_; ++i) c += static_cast<int>(out_[i].count());
  return c;
}

Digraph Digraph::induced(const VertexList& keep) const {
  Digraph g(static_cast<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b)
      if (a != b && has_edge(keep[a], keep[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
  return g;
}

Digraph Digraph::prefix(int m) const {
  Digraph g(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && has_edge(i, j)) g.add_edge(i, j);
  return g;
}

std::optional<std::vector<int>> acyclic_order_within(const Digraph& d, const BitVec& alive_in) {
  BitVec alive = alive_in;
  std::vector<int> order;
  order.reserve(alive.count());
  const std::size_t total = alive.count();
  for (std::size_t step = 0; step < total; ++step) {
    int src = -1;
    // smallest-index vertex with no live in-edges
    for (std::size_t w = 0; w < alive.word_count() && src < 0; ++w) {
      std::uint64_t bits = alive.word(w);
      while (bits) {
        int v = static_cast<int>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        if (!d.in_row(v).intersects(alive)) {
          src = v;
          break;
        }
      }
    }
    if (src < 0) return std::nullopt;
    order.push_back(src);
    alive.set(static_cast<std::size_t>(src), false);
  }
  return order;
}

std::optional<TotalOrder> is_acyclic(const Digraph& d) {
  BitVec alive(d.n());
  for (int i = 0; i < d.n(); ++i) alive.set(i);
  auto order = acyclic_order_within(d, alive);
  if (!order) return std::nullopt;
  return TotalOrder{std::move(*order)};
}

bool is_transitive_tournament(const Digraph& d) {
  return d.is_tournament() && is_acyclic(d).has_value();
}

BitVec charvec(int v, const InversionFamily& f) {
  BitVec cv(f.sets.size());
  for (std::size_t i = 0; i < f.sets.size(); ++i)
    if (std::binary_search(f.sets[i].begin(), f.sets[i].end(), v)) cv.set(i);
  return cv;
}

std::vector<BitVec> charvecs(const Digraph& d, const InversionFamily& f) {
  const std::size_t k = f.sets.size();
  std::vector<BitVec> cv(d.n(), BitVec(k));
  for (std::size_t i = 0; i < k; ++i)
    for (int v : f.sets[i]) {
      if (v < 0 || v >= d.n())
        throw std::invalid_argument("InversionFamily: set " + std::to_string(i) +
                                    " references vertex " + std::to_string(v) +
                                    " outside 0.." + std::to_string(d.n() - 1));
      cv[v].set(i);
    }
  return cv;
}

std::vector<Atom> atoms(const Digraph& d, const InversionFamily& f) {
  auto cv = charvecs(d, f);
  std::map<std::vector<std::uint64_t>, Atom> by_vec;
  for (int v = 0; v < d.n(); ++v) {
    std::vector<std::uint64_t> key(cv[v].word_count());
    for (std::size_t w = 0; w < key.size(); ++w) key[w] = cv[v].word(w);
    std::reverse(key.begin(), key.end());  // value order: high words first
    auto [it, fresh] = by_vec.try_emplace(std::move(key));
    if (fresh) it->second.vec = cv[v];
    it->second.members.push_back(v);
  }
  std::vector<Atom> out;
  out.reserve(by_vec.size());
  for (auto& [_, atom] : by_vec) out.push_back(std::move(atom));
  return out;
}

Digraph invert_family(const Digraph& d, const InversionFamily& f) {
  auto cv = charvecs(d, f);
  Digraph g(d.n());
  for (int u = 0; u < d.n(); ++u)
    for (int v = u + 1; v < d.n(); ++v) {
      int from, to;
      if (d.has_edge(u, v)) {
        from = u;
        to = v;
      } else if (d.has_edge(v, u)) {
        from = v;
        to = u;
      } else {
        continue;
      }
      if (dot(cv[u], cv[v])) std::swap(from, to);
      g.add_edge(from, to);
    }
  return g;
}

bool is_decycling(const Digraph& d, const InversionFamily& f) {
  return is_acyclic(invert_family(d, f)).has_value();
}

InversionFamily solve_vertex(const Digraph& d, int v, const InversionFamily& f) {
  if (v < 0 || v >= d.n()) throw std::invalid_argument("solve_vertex: vertex out of range");
  for (const auto& s : f.sets)
    if (std::binary_search(s.begin(), s.end(), v))
      throw std::invalid_argument("solve_vertex: family must avoid the solved vertex");
  // f touches no edge at v, so checking it on d minus v is the same as
  // inverting in d and peeling v away.
  Digraph inverted = invert_family(d, f);
  BitVec rest(d.n());
  for (int i = 0; i < d.n(); ++i)
    if (i != v) rest.set(i);
  if (!acyclic_order_within(inverted, rest))
    throw std::invalid_argument("solve_vertex: family does not decycle d minus v");

  VertexList a = mask_to_list(d.out_row(v));
  VertexList av = a;
  av.insert(std::lower_bound(av.begin(), av.end(), v), v);
  InversionFamily out = f;
  out.sets.push_back(std::move(av));
  out.sets.push_back(std::move(a));
  return out;
}

Digraph extend_to_tournament(const Digraph& d, const InversionFamily& f) {
  Digraph inverted = invert_family(d, f);
  auto order = is_acyclic(inverted);
  if (!order) throw std::invalid_argument("extend_to_tournament: family does not decycle d");
  std::vector<int> pos(d.n());
  for (int i = 0; i < d.n(); ++i) pos[order->perm[i]] = i;
  for (int u = 0; u < d.n(); ++u)
    for (int v = u + 1; v < d.n(); ++v)
      if (!inverted.has_pair(u, v)) {
        if (pos[u] < pos[v])
          inverted.add_edge(u, v);
        else
          inverted.add_edge(v, u);
      }
  return invert_family(inverted, f);
}

VertexList mask_to_list(const BitVec& mask) { return mask.to_indices(); }

BitVec list_to_mask(const VertexList& list, int n) {
  BitVec m(n);
  for (int v : list) m.set(v);
  return m;
}

}  // namespace inv
