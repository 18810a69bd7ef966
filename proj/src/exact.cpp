#include "inv/exact.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace inv {

InversionFamily VectorAssignment::to_family() const {
  InversionFamily f;
  f.sets.resize(k);
  for (int v = 0; v < static_cast<int>(vecs.size()); ++v)
    for (int i = 0; i < k; ++i)
      if (vecs[v].test(i)) f.sets[i].push_back(v);
  return f;
}

namespace {

inline int par32(std::uint32_t x) { return std::popcount(x) & 1; }

int resolve_threads(int requested) {
  if (requested > 0) return requested;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

struct AbortedSearch {};

// Backtracking over per-vertex vectors of F_2^k. Vertices are assigned in
// index order and values tried in increasing numeric order, so the first
// accepting assignment found is the lexicographically smallest one. A
// partial assignment is rejected as soon as the flipped induced subdigraph
// on the assigned vertices contains a directed cycle; a topological order of
// that subdigraph is maintained incrementally, with a full Kahn recheck when
// plain insertion fails (which only happens for non-tournament pairs).
struct VecSearch {
  int n = 0;
  int k = 0;
  std::uint32_t value_count = 1;
  bool symmetry = true;
  bool tournament = false;
  std::vector<std::int8_t> dir;  // dir[u*n+v]: 1 = u->v, -1 = v->u, 0 = none

  std::vector<std::uint32_t> vals;
  std::vector<int> topo;

  std::function<bool()> abort_check;
  std::uint64_t nodes = 0;

  void init(const Digraph& d, int kk, bool sym) {
    n = d.n();
    k = kk;
    value_count = std::uint32_t{1} << k;
    symmetry = sym;
    tournament = d.is_tournament();
    dir.assign(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u)
      d.out_row(u).for_each_set([&](int v) {
        dir[static_cast<std::size_t>(u) * n + v] = 1;
        dir[static_cast<std::size_t>(v) * n + u] = -1;
      });
    vals.assign(n, 0);
    topo.clear();
    topo.reserve(n);
  }

  // Direction of the pair (u,v) after flips, with candidate value a for v.
  // Requires the pair to carry an edge.
  bool flipped_towards(int u, int v, std::uint32_t a) const {
    bool uv = dir[static_cast<std::size_t>(u) * n + v] > 0;
    return uv != (par32(vals[u] & a) != 0);
  }

  struct Undo {
    int pos = -1;
    std::vector<int> saved;
    bool rebuilt = false;
  };

  bool try_insert(int v, std::uint32_t a, Undo& undo) {
    const int sz = static_cast<int>(topo.size());
    if (tournament) {
      int p = 0;
      while (p < sz && flipped_towards(topo[p], v, a)) ++p;
      for (int i = p; i < sz; ++i)
        if (flipped_towards(topo[i], v, a)) return false;
      topo.insert(topo.begin() + p, v);
      undo.pos = p;
      return true;
    }
    int pmin = 0, pmax = sz;
    for (int i = 0; i < sz; ++i) {
      int u = topo[i];
      std::int8_t dd = dir[static_cast<std::size_t>(u) * n + v];
      if (dd == 0) continue;
      if (flipped_towards(u, v, a)) {
        pmin = i + 1;
      } else if (pmax == sz) {
        pmax = i;
      }
    }
    if (pmin <= pmax) {
      topo.insert(topo.begin() + pmin, v);
      undo.pos = pmin;
      return true;
    }
    return full_recheck(v, a, undo);
  }

  // The maintained order rejected v, but some other topological order of the
  // assigned subgraph may admit it: redo Kahn from scratch.
  bool full_recheck(int v, std::uint32_t a, Undo& undo) {
    std::vector<int> verts = topo;
    verts.push_back(v);
    std::sort(verts.begin(), verts.end());
    const int m = static_cast<int>(verts.size());
    std::uint64_t alive = (m >= 64) ? ~0ull : ((1ull << m) - 1);
    std::vector<int> fresh;
    fresh.reserve(m);
    const std::uint32_t saved_val = vals[v];
    vals[v] = a;
    auto flipped_edge = [&](int x, int y) {
      std::int8_t dd = dir[static_cast<std::size_t>(x) * n + y];
      if (dd == 0) return false;
      return (dd > 0) != (par32(vals[x] & vals[y]) != 0);
    };
    for (int step = 0; step < m; ++step) {
      int pick = -1;
      for (int i = 0; i < m && pick < 0; ++i) {
        if (!((alive >> i) & 1)) continue;
        bool source = true;
        for (int j = 0; j < m; ++j)
          if (j != i && ((alive >> j) & 1) && flipped_edge(verts[j], verts[i])) {
            source = false;
            break;
          }
        if (source) pick = i;
      }
      if (pick < 0) {
        vals[v] = saved_val;
        return false;
      }
      fresh.push_back(verts[pick]);
      alive &= ~(1ull << pick);
    }
    vals[v] = saved_val;
    undo.rebuilt = true;
    undo.saved = std::move(topo);
    topo = std::move(fresh);
    return true;
  }

  void undo_insert(const Undo& undo) {
    if (undo.rebuilt)
      topo = undo.saved;
    else
      topo.erase(topo.begin() + undo.pos);
  }

  // `depth` is the next vertex to assign, `m` the number of coordinates in
  // use. On success the accepting assignment is left in vals.
  bool dfs(int depth, int m) {
    if (depth == n) return true;
    if ((++nodes & 0xFFF) == 0 && abort_check && abort_check()) throw AbortedSearch{};
    for (std::uint32_t a = 0; a < value_count; ++a) {
      int fresh_coords = 0;
      if (symmetry) {
        std::uint32_t hi = a >> m;
        if (hi & (hi + 1)) continue;  // new coordinates must be the next unused ones
        fresh_coords = std::popcount(hi);
      }
      Undo undo;
      if (!try_insert(depth, a, undo)) continue;
      vals[depth] = a;
      if (dfs(depth + 1, m + fresh_coords)) return true;
      vals[depth] = 0;
      undo_insert(undo);
    }
    return false;
  }
};

void check_vector_guard(const Digraph& d, int k, const SolveOptions& opt) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (k > 30) throw guard_exceeded("k > 30 is outside the supported search range");
  if (!opt.accept_long_runtimes && k * d.n() > opt.guard_kn)
    throw guard_exceeded("k*n = " + std::to_string(k * d.n()) + " exceeds the guard of " +
                         std::to_string(opt.guard_kn) +
                         " (pass the long-runtimes flag to override)");
}

InversionFamily family_from_vals(const std::vector<std::uint32_t>& vals, int k) {
  InversionFamily f;
  f.sets.resize(k);
  for (int v = 0; v < static_cast<int>(vals.size()); ++v)
    for (int i = 0; i < k; ++i)
      if ((vals[v] >> i) & 1) f.sets[i].push_back(v);
  return f;
}

std::optional<std::vector<std::uint32_t>> search_serial(const Digraph& d, int k,
                                                        const SolveOptions& opt) {
  VecSearch eng;
  eng.init(d, k, opt.prune_symmetry);
  if (!eng.dfs(0, 0)) return std::nullopt;
  return eng.vals;
}

struct FrontierNode {
  std::vector<std::uint32_t> vals;
  std::vector<int> topo;
  int m = 0;
};

std::optional<std::vector<std::uint32_t>> search_parallel(const Digraph& d, int k,
                                                          const SolveOptions& opt, int threads) {
  VecSearch base;
  base.init(d, k, opt.prune_symmetry);
  const int n = base.n;
  const std::size_t target = std::max<std::size_t>(64, static_cast<std::size_t>(threads) * 8);

  std::vector<FrontierNode> items;
  items.push_back({std::vector<std::uint32_t>(n, 0), {}, 0});
  int depth = 0;
  VecSearch scratch = base;
  while (depth < n && items.size() < target) {
    std::vector<FrontierNode> next;
    for (const auto& node : items) {
      scratch.vals = node.vals;
      scratch.topo = node.topo;
      for (std::uint32_t a = 0; a < base.value_count; ++a) {
        int fresh_coords = 0;
        if (base.symmetry) {
          std::uint32_t hi = a >> node.m;
          if (hi & (hi + 1)) continue;
          fresh_coords = std::popcount(hi);
        }
        VecSearch::Undo undo;
        if (!scratch.try_insert(depth, a, undo)) continue;
        FrontierNode child;
        child.vals = node.vals;
        child.vals[depth] = a;
        child.topo = scratch.topo;
        child.m = node.m + fresh_coords;
        next.push_back(std::move(child));
        scratch.undo_insert(undo);
      }
    }
    items = std::move(next);
    ++depth;
    if (items.empty()) return std::nullopt;
  }
  if (depth == n) return items.front().vals;  // frontier order is lexicographic

  // Independent DFS per frontier node; the reported witness is the one from
  // the earliest accepting node, so the outcome matches the serial search for
  // every thread count.
  std::atomic<long> best{LONG_MAX};
  std::vector<std::vector<std::uint32_t>> results(items.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
  for (long i = 0; i < static_cast<long>(items.size()); ++i) {
    if (best.load(std::memory_order_relaxed) < i) continue;
    VecSearch eng = base;
    eng.vals = items[i].vals;
    eng.topo = items[i].topo;
    eng.abort_check = [&best, i] { return best.load(std::memory_order_relaxed) < i; };
    bool ok = false;
    try {
      ok = eng.dfs(depth, items[i].m);
    } catch (const AbortedSearch&) {
      ok = false;
    }
    if (ok) {
      results[i] = eng.vals;
      long cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }
  long w = best.load();
  if (w == LONG_MAX) return std::nullopt;
  return results[w];
}

}  // namespace

std::optional<InversionFamily> decide_inv_le_serial(const Digraph& d, int k,
                                                    const SolveOptions& opt) {
  check_vector_guard(d, k, opt);
  auto vals = search_serial(d, k, opt);
  if (!vals) return std::nullopt;
  return family_from_vals(*vals, k);
}

std::optional<InversionFamily> decide_inv_le(const Digraph& d, int k, const SolveOptions& opt) {
  check_vector_guard(d, k, opt);
  const int threads = resolve_threads(opt.threads);
  auto vals = threads <= 1 ? search_serial(d, k, opt) : search_parallel(d, k, opt, threads);
  if (!vals) return std::nullopt;
  return family_from_vals(*vals, k);
}

std::optional<InvNumber> inversion_number(const Digraph& d, int max_k, const SolveOptions& opt) {
  if (max_k < 0) throw std::invalid_argument("inversion_number: max_k must be non-negative");
  for (int k = 0; k <= max_k; ++k)
    if (auto f = decide_inv_le(d, k, opt)) return InvNumber{k, std::move(*f)};
  return std::nullopt;
}

void enumerate_decycling_assignments(const Digraph& d, int k,
                                     const std::function<void(const VectorAssignment&)>& sink,
                                     const SolveOptions& opt) {
  check_vector_guard(d, k, opt);
  VecSearch eng;
  eng.init(d, k, /*sym=*/false);  // enumeration must be exhaustive
  const int n = eng.n;

  VectorAssignment out;
  out.k = k;
  out.vecs.assign(n, BitVec(static_cast<std::size_t>(k)));

  auto emit = [&] {
    for (int v = 0; v < n; ++v) {
      BitVec b(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i)
        if ((eng.vals[v] >> i) & 1) b.set(i);
      out.vecs[v] = std::move(b);
    }
    sink(out);
  };

  // plain lexicographic DFS, every accepting leaf emitted
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      emit();
      return;
    }
    for (std::uint32_t a = 0; a < eng.value_count; ++a) {
      VecSearch::Undo undo;
      if (!eng.try_insert(depth, a, undo)) continue;
      eng.vals[depth] = a;
      self(self, depth + 1);
      eng.vals[depth] = 0;
      eng.undo_insert(undo);
    }
  };
  rec(rec, 0);
}

std::optional<InvNumber> inversion_distance(const Digraph& t, const Digraph& t2, int max_k,
                                            const SolveOptions& opt) {
  if (t.n() != t2.n()) throw std::invalid_argument("inversion_distance: vertex sets differ");
  if (!t.is_tournament() || !t2.is_tournament())
    throw std::invalid_argument("inversion_distance: inputs must be tournaments");
  const int n = t.n();
  std::vector<std::uint8_t> dis(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && t.has_edge(u, v) != t2.has_edge(u, v)) dis[static_cast<std::size_t>(u) * n + v] = 1;

  for (int k = 0; k <= max_k; ++k) {
    if (k > 30) throw guard_exceeded("k > 30 is outside the supported search range");
    if (!opt.accept_long_runtimes && k * n > opt.guard_kn)
      throw guard_exceeded("k*n exceeds the guard while searching for the distance");
    const std::uint32_t value_count = std::uint32_t{1} << k;
    std::vector<std::uint32_t> vals(n, 0);
    // dot(vals[u], a) must equal the disagreement bit for every assigned pair
    auto rec = [&](auto&& self, int depth, int m) -> bool {
      if (depth == n) return true;
      for (std::uint32_t a = 0; a < value_count; ++a) {
        int fresh_coords = 0;
        if (opt.prune_symmetry) {
          std::uint32_t hi = a >> m;
          if (hi & (hi + 1)) continue;
          fresh_coords = std::popcount(hi);
        }
        bool ok = true;
        for (int u = 0; u < depth; ++u)
          if (par32(vals[u] & a) != dis[static_cast<std::size_t>(u) * n + depth]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        vals[depth] = a;
        if (self(self, depth + 1, m + fresh_coords)) return true;
        vals[depth] = 0;
      }
      return false;
    };
    if (rec(rec, 0, 0)) return InvNumber{k, family_from_vals(vals, k)};
  }
  return std::nullopt;
}

TauResult tau(const Digraph& d, const SolveOptions& opt) {
  const int n = d.n();
  if (!opt.accept_long_runtimes && n > opt.guard_tau_n)
    throw guard_exceeded("tau: n exceeds the subset-search guard");
  BitVec full(n);
  for (int i = 0; i < n; ++i) full.set(i);
  for (int s = 0; s <= n; ++s) {
    std::vector<int> comb(s);
    for (int i = 0; i < s; ++i) comb[i] = i;
    while (true) {
      BitVec alive = full;
      for (int v : comb) alive.set(v, false);
      if (acyclic_order_within(d, alive)) return {s, VertexList(comb.begin(), comb.end())};
      // next combination in lexicographic order
      int i = s - 1;
      while (i >= 0 && comb[i] == n - s + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return {n, mask_to_list(full)};  // unreachable: deleting everything is acyclic
}

TauPrimeResult tau_prime(const Digraph& d, const SolveOptions& opt) {
  const int n = d.n();
  if (!opt.accept_long_runtimes && n > opt.guard_tau_prime_n)
    throw guard_exceeded("tau_prime: n exceeds the subset-DP guard");
  if (n == 0) return {0, {}};
  if (n > 25) throw guard_exceeded("tau_prime: n too large for the subset DP");

  std::vector<std::uint32_t> out_mask(n, 0);
  for (int v = 0; v < n; ++v)
    d.out_row(v).for_each_set([&](int w) { out_mask[v] |= std::uint32_t{1} << w; });

  // dp[S] = min backward edges over orderings of S, minimised over the
  // vertex placed last.
  const std::uint32_t full = (n == 32) ? ~0u : ((std::uint32_t{1} << n) - 1);
  std::vector<std::uint16_t> dp(static_cast<std::size_t>(full) + 1, 0xFFFF);
  dp[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint16_t best = 0xFFFF;
    std::uint32_t rest = mask;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      std::uint32_t prev = mask & ~(std::uint32_t{1} << v);
      std::uint16_t cand =
          static_cast<std::uint16_t>(dp[prev] + std::popcount(out_mask[v] & prev));
      if (cand < best) best = cand;
    }
    dp[mask] = best;
  }

  std::vector<int> order_rev;
  std::uint32_t mask = full;
  while (mask) {
    std::uint32_t rest = mask;
    int pick = -1;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      std::uint32_t prev = mask & ~(std::uint32_t{1} << v);
      if (dp[prev] + std::popcount(out_mask[v] & prev) == dp[mask]) {
        pick = v;
        break;  // smallest qualifying vertex, deterministic witness
      }
    }
    order_rev.push_back(pick);
    mask &= ~(std::uint32_t{1} << pick);
  }

  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order_rev[n - 1 - i]] = i;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    d.out_row(u).for_each_set([&](int w) {
      if (pos[u] > pos[w]) edges.emplace_back(u, w);
    });
  std::sort(edges.begin(), edges.end());
  return {dp[full], std::move(edges)};
}

}  // namespace inv
