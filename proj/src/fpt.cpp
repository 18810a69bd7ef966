#include "inv/fpt.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace inv {

bool is_bad_triple(const BitVec& a, const BitVec& b, const BitVec& c) {
  const int ab = dot(a, b);
  return ab == dot(b, c) && ab != dot(a, c);
}

namespace {

inline int par32(std::uint32_t x) { return std::popcount(x) & 1; }

inline bool bad3(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  const int ab = par32(a & b);
  return ab == par32(b & c) && ab != par32(a & c);
}

struct TriplesHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto x : v) {
      h ^= x;
      h *= 0x100000001b3ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

// state key: canonical sorted triple encoding -> lex-smallest representative
using StateMap =
    std::unordered_map<std::vector<std::uint64_t>, std::vector<std::uint8_t>, TriplesHash>;

void upsert(StateMap& m, std::vector<std::uint64_t>&& key, std::vector<std::uint8_t>&& rep) {
  auto it = m.find(key);
  if (it == m.end())
    m.emplace(std::move(key), std::move(rep));
  else if (rep < it->second)
    it->second = std::move(rep);
}

// Expands one (state, branch-value) pair; returns false when the branch dies
// on a bad triple.
bool expand(const std::vector<std::uint64_t>& triples, std::uint32_t wv, int width,
            std::vector<std::uint64_t>& merged) {
  const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
  merged.clear();
  merged.reserve(triples.size() * 4);
  for (std::uint64_t t : triples) {
    const std::uint32_t v1 = static_cast<std::uint32_t>(t & mask);
    const std::uint32_t v2 = static_cast<std::uint32_t>((t >> width) & mask);
    const std::uint32_t v3 = static_cast<std::uint32_t>((t >> (2 * width)) & mask);
    if (bad3(v1, v2, wv) || bad3(v1, v3, wv) || bad3(v2, v3, wv)) return false;
    merged.push_back(t);
    merged.push_back(v1 | (std::uint64_t{v2} << width) | (std::uint64_t{wv} << (2 * width)));
    merged.push_back(v1 | (std::uint64_t{v3} << width) | (std::uint64_t{wv} << (2 * width)));
    merged.push_back(v2 | (std::uint64_t{v3} << width) | (std::uint64_t{wv} << (2 * width)));
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return true;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

TripleSet triple_set_of(const std::vector<BitVec>& vecs, int s) {
  TripleSet out;
  if (vecs.empty()) return out;
  const int width = static_cast<int>(vecs.front().size());
  if (s < 0 || s > width) throw std::invalid_argument("triple_set_of: bad fixed-bit count");
  if (3 * width > 62) throw guard_exceeded("triple_set_of: width too large for the packing");
  std::vector<std::uint32_t> packed;
  for (const auto& v : vecs) {
    if (static_cast<int>(v.size()) != width)
      throw std::invalid_argument("triple_set_of: vectors must share one width");
    std::uint32_t bits = 0;
    for (int b = 0; b < width; ++b)
      if (v.test(b)) bits |= std::uint32_t{1} << b;
    packed.push_back(bits);
    out.rep.push_back(static_cast<std::uint8_t>(bits >> s));
  }
  for (std::size_t a = 0; a < packed.size(); ++a)
    for (std::size_t b = a + 1; b < packed.size(); ++b)
      for (std::size_t c = b + 1; c < packed.size(); ++c)
        out.triples.push_back(packed[a] | (std::uint64_t{packed[b]} << width) |
                              (std::uint64_t{packed[c]} << (2 * width)));
  std::sort(out.triples.begin(), out.triples.end());
  out.triples.erase(std::unique(out.triples.begin(), out.triples.end()), out.triples.end());
  return out;
}

CompressionInput CompressionInput::make(Digraph t0, InversionFamily x, int k,
                                        std::optional<TotalOrder> order) {
  if (!t0.is_tournament()) throw std::invalid_argument("CompressionInput: t0 must be a tournament");
  if (k < 0) throw std::invalid_argument("CompressionInput: k must be non-negative");
  auto computed = is_acyclic(invert_family(t0, x));
  if (!computed) throw std::invalid_argument("CompressionInput: x does not decycle t0");
  if (order) {
    if (*order != *computed)
      throw std::invalid_argument("CompressionInput: order is not the one associated to the image");
    return {std::move(t0), std::move(x), std::move(*order), k};
  }
  return {std::move(t0), std::move(x), std::move(*computed), k};
}

std::optional<CompressResult> compress(const CompressionInput& ci, CompressStats* stats,
                                       int threads) {
  const Digraph& t0 = ci.t0;
  const int n = t0.n();
  const int s = ci.x.size();
  const int k = ci.k;
  const int width = s + k;
  if (k < 0) throw std::invalid_argument("compress: k must be non-negative");
  if (static_cast<int>(ci.order.perm.size()) != n)
    throw std::invalid_argument("compress: order must cover every vertex");
  if (k > 8) throw guard_exceeded("compress: k too large for the branch enumeration");
  if (3 * width > 62) throw guard_exceeded("compress: s+k too large for the triple packing");

  if (n < 3) {
    InversionFamily y;
    y.sets.resize(k);
    return CompressResult{std::move(y), *is_acyclic(t0)};
  }

  const std::uint32_t branch = std::uint32_t{1} << k;
  auto cvx = charvecs(t0, ci.x);
  std::vector<std::uint32_t> fixed(n);
  for (int pos = 0; pos < n; ++pos) {
    const int v = ci.order.perm[pos];
    std::uint32_t f = 0;
    for (int i = 0; i < s; ++i)
      if (cvx[v].test(i)) f |= std::uint32_t{1} << i;
    fixed[pos] = f;
  }
  auto full_vec = [&](int pos, std::uint32_t y) { return fixed[pos] | (y << s); };

  // Base: the first three vertices jointly; shorter prefixes carry no triple
  // and are not collapsed.
  StateMap cur;
  for (std::uint32_t y1 = 0; y1 < branch; ++y1)
    for (std::uint32_t y2 = 0; y2 < branch; ++y2)
      for (std::uint32_t y3 = 0; y3 < branch; ++y3) {
        const std::uint32_t v1 = full_vec(0, y1), v2 = full_vec(1, y2), v3 = full_vec(2, y3);
        if (bad3(v1, v2, v3)) continue;
        std::vector<std::uint64_t> key{v1 | (std::uint64_t{v2} << width) |
                                       (std::uint64_t{v3} << (2 * width))};
        upsert(cur, std::move(key),
               {static_cast<std::uint8_t>(y1), static_cast<std::uint8_t>(y2),
                static_cast<std::uint8_t>(y3)});
      }
  if (stats) {
    stats->live_states.push_back(cur.size());
    stats->transitions.push_back(static_cast<std::size_t>(branch) * branch * branch);
  }

  const int nthreads = resolve_threads(threads);
  for (int pos = 3; pos < n && !cur.empty(); ++pos) {
    StateMap next;
    std::size_t trans = 0;
    if (nthreads <= 1 || cur.size() < 2 * static_cast<std::size_t>(nthreads)) {
      std::vector<std::uint64_t> merged;
      for (const auto& [triples, rep] : cur) {
        for (std::uint32_t y = 0; y < branch; ++y) {
          ++trans;
          if (!expand(triples, full_vec(pos, y), width, merged)) continue;
          std::vector<std::uint8_t> rep2 = rep;
          rep2.push_back(static_cast<std::uint8_t>(y));
          upsert(next, std::vector<std::uint64_t>(merged), std::move(rep2));
        }
      }
    } else {
      // Frontier expanded in parallel into thread-local maps; the merge keeps
      // the lexicographically smaller representative, so the result matches
      // sequential execution for every thread count.
      std::vector<const StateMap::value_type*> items;
      items.reserve(cur.size());
      for (const auto& kv : cur) items.push_back(&kv);
      std::vector<StateMap> locals(nthreads);
#ifdef _OPENMP
#pragma omp parallel num_threads(nthreads) reduction(+ : trans)
#endif
      {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
#else
        const int tid = 0;
#endif
        std::vector<std::uint64_t> merged;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (long i = 0; i < static_cast<long>(items.size()); ++i) {
          for (std::uint32_t y = 0; y < branch; ++y) {
            ++trans;
            if (!expand(items[i]->first, full_vec(pos, y), width, merged)) continue;
            std::vector<std::uint8_t> rep2 = items[i]->second;
            rep2.push_back(static_cast<std::uint8_t>(y));
            upsert(locals[tid], std::vector<std::uint64_t>(merged), std::move(rep2));
          }
        }
      }
      for (auto& local : locals)
        for (auto& [key, rep] : local)
          upsert(next, std::vector<std::uint64_t>(key), std::move(rep));
    }
    cur = std::move(next);
    if (stats) {
      stats->live_states.push_back(cur.size());
      stats->transitions.push_back(trans);
    }
  }
  if (cur.empty()) return std::nullopt;

  const std::vector<std::uint8_t>* best = nullptr;
  for (const auto& [_, rep] : cur)
    if (!best || rep < *best) best = &rep;

  InversionFamily family;
  family.sets.resize(k);
  std::vector<BitVec> vecs(n, BitVec(static_cast<std::size_t>(width)));
  for (int pos = 0; pos < n; ++pos) {
    const int v = ci.order.perm[pos];
    const std::uint32_t full = full_vec(pos, (*best)[pos]);
    for (int b = 0; b < width; ++b)
      if ((full >> b) & 1) vecs[v].set(b);
    for (int j = 0; j < k; ++j)
      if (((*best)[pos] >> j) & 1) family.sets[j].push_back(v);
  }
  for (auto& set : family.sets) std::sort(set.begin(), set.end());
  if (!is_decycling(t0, family)) throw std::logic_error("compress: surviving state is not decycling");
  return CompressResult{std::move(family), merge_inverted_order(ci.order, vecs)};
}

TotalOrder merge_inverted_order(const TotalOrder& base, const std::vector<BitVec>& vecs) {
  const int n = static_cast<int>(base.perm.size());
  if (vecs.size() != base.perm.size())
    throw std::invalid_argument("merge_inverted_order: one vector per vertex required");
  if (n == 0) return {};

  struct AtomState {
    BitVec vec;
    std::vector<int> members;  // in output order
    std::size_t front = 0;
  };
  std::vector<AtomState> at;
  std::unordered_map<std::string, std::size_t> index;  // vector bits -> atom
  for (int v : base.perm) {
    const std::string key = vecs[v].to_string();
    auto [it, fresh] = index.try_emplace(key, at.size());
    if (fresh) at.push_back({vecs[v], {}, 0});
    at[it->second].members.push_back(v);
  }
  for (auto& a : at)
    if (dot(a.vec, a.vec) == 1) std::reverse(a.members.begin(), a.members.end());

  const std::size_t m = at.size();
  std::vector<char> flip(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) flip[i * m + j] = static_cast<char>(dot(at[i].vec, at[j].vec));

  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[base.perm[i]] = i;

  TotalOrder out;
  out.perm.reserve(n);
  for (int step = 0; step < n; ++step) {
    std::size_t best = m;
    for (std::size_t a = 0; a < m; ++a) {
      if (at[a].front == at[a].members.size()) continue;
      if (best == m) {
        best = a;
        continue;
      }
      const int u = at[a].members[at[a].front];
      const int w = at[best].members[at[best].front];
      const bool u_first = (pos[u] < pos[w]) != (flip[a * m + best] != 0);
      if (u_first) best = a;
    }
    out.perm.push_back(at[best].members[at[best].front]);
    ++at[best].front;
  }
  return out;
}

TotalOrder reconstruct_order(const Digraph& t0, const InversionFamily& f) {
  if (!t0.is_tournament()) throw std::invalid_argument("reconstruct_order: t0 must be a tournament");
  const int n = t0.n();
  auto cvs = charvecs(t0, f);
  auto parts = atoms(t0, f);

  // Each atom of a decycled tournament induces a transitive subtournament;
  // its image order is the induced order, reversed when the edges inside the
  // atom flip.
  std::vector<std::vector<int>> lists;
  for (const auto& atom : parts) {
    auto order = acyclic_order_within(t0, list_to_mask(atom.members, n));
    if (!order)
      throw std::invalid_argument("reconstruct_order: family does not decycle the tournament");
    if (dot(atom.vec, atom.vec) == 1) std::reverse(order->begin(), order->end());
    lists.push_back(std::move(*order));
  }

  const std::size_t m = parts.size();
  std::vector<char> flip(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      flip[i * m + j] = static_cast<char>(dot(parts[i].vec, parts[j].vec));

  std::vector<std::size_t> front(m, 0);
  TotalOrder out;
  out.perm.reserve(n);
  for (int step = 0; step < n; ++step) {
    std::size_t best = m;
    for (std::size_t a = 0; a < m; ++a) {
      if (front[a] == lists[a].size()) continue;
      if (best == m) {
        best = a;
        continue;
      }
      const int u = lists[a][front[a]];
      const int w = lists[best][front[best]];
      const bool u_first = t0.has_edge(u, w) != (flip[a * m + best] != 0);
      if (u_first) best = a;
    }
    out.perm.push_back(lists[best][front[best]]);
    ++front[best];
  }

  // A non-decycling family can slip through the per-atom checks; verify the
  // merged order against the inverted tournament.
  Digraph image = invert_family(t0, f);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!image.has_edge(out.perm[i], out.perm[j]))
        throw std::invalid_argument("reconstruct_order: family does not decycle the tournament");
  return out;
}

std::optional<CompressResult> fpt_inversion(const Digraph& t, int k, CompressStats* stats,
                                            int threads) {
  if (!t.is_tournament()) throw std::invalid_argument("fpt_inversion: input must be a tournament");
  if (k < 0) throw std::invalid_argument("fpt_inversion: k must be non-negative");
  const int n = t.n();
  if (n < 3) return CompressResult{InversionFamily{}, *is_acyclic(t)};

  InversionFamily family;  // for the current prefix, size <= k
  TotalOrder order{{0}};
  for (int m = 2; m <= n; ++m) {
    const int v = m - 1;
    Digraph prefix = t.prefix(m);
    VertexList a;
    t.out_row(v).for_each_set([&](int w) {
      if (w < m) a.push_back(w);
    });
    VertexList av = a;
    av.insert(std::lower_bound(av.begin(), av.end(), v), v);

    CompressionInput ci;
    ci.t0 = std::move(prefix);
    ci.x = family;
    ci.x.sets.push_back(std::move(av));
    ci.x.sets.push_back(std::move(a));
    ci.order = order;
    ci.order.perm.push_back(v);
    ci.k = k;

    auto res = compress(ci, stats, threads);
    if (!res) return std::nullopt;  // sound: subtournaments only lose inversions
    family = std::move(res->family);
    order = std::move(res->order);
  }
  return CompressResult{std::move(family), std::move(order)};
}

}  // namespace inv
