#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "exgraph/graph.hpp"

namespace exgraph {

struct Matching {
  std::vector<std::pair<int, int>> pairs;
};

struct TutteBergeWitness {
  std::vector<int> B;
  std::vector<int> odd_components;  // sizes of odd components of G-B, descending
  long long bound;                  // |B| + sum floor(a_i/2) over all components
};

struct GallaiEdmonds {
  std::vector<int> D;  // vertices missed by some maximum matching
  std::vector<int> A;  // N(D) \ D
  std::vector<int> C;  // the rest
};

namespace detail {

// Edmonds blossom, O(n^3). Array-based contraction via base[]; augmenting
// paths found by BFS from each exposed vertex.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& graph) : n_(graph.n), g_(graph.n) {
    for (int u = 0; u < n_; ++u) g_[u] = graph.adj[u].to_vector();
    match_.assign(n_, -1);
    p_.assign(n_, -1);
    base_.resize(n_);
    used_.assign(n_, false);
    blossom_.assign(n_, false);
  }

  Matching solve() {
    // greedy seed matching
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (int to : g_[v]) {
        if (match_[to] == -1) {
          match_[v] = to;
          match_[to] = v;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int u = find_path(v);
      while (u != -1) {
        int pv = p_[u], ppv = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = ppv;
      }
    }
    Matching out;
    for (int v = 0; v < n_; ++v)
      if (match_[v] > v) out.pairs.emplace_back(v, match_[v]);
    return out;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, false);
    int cur = a;
    while (true) {
      cur = base_[cur];
      seen[cur] = true;
      if (match_[cur] == -1) break;
      cur = p_[match_[cur]];
    }
    cur = b;
    while (true) {
      cur = base_[cur];
      if (seen[cur]) return cur;
      cur = p_[match_[cur]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = true;
      blossom_[base_[match_[v]]] = true;
      p_[v] = child;
      child = match_[v];
      v = p_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(p_.begin(), p_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : g_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && p_[match_[to]] != -1)) {
          int curbase = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, curbase, to);
          mark_path(to, curbase, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = curbase;
              if (!used_[i]) {
                used_[i] = true;
                q.push(i);
              }
            }
          }
        } else if (p_[to] == -1) {
          p_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> g_;
  std::vector<int> match_, p_, base_;
  std::vector<char> used_, blossom_;
};

// Greedy-coloring branch and bound for maximum clique (Tomita-style).
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  // Returns omega; stops early at limit+1 when limit >= 0 (enough for a
  // "is there a clique larger than limit" query).
  int run(int limit = -1) {
    best_ = 0;
    limit_ = limit;
    stop_ = false;
    cur_.clear();
    VertexSet all(g_.n);
    for (int v = 0; v < g_.n; ++v) all.set(v);
    expand(all);
    return best_;
  }

 private:
  void expand(const VertexSet& candidates) {
    if (stop_) return;
    std::vector<int> verts = candidates.to_vector();
    if (verts.empty()) {
      if (static_cast<int>(cur_.size()) > best_) {
        best_ = static_cast<int>(cur_.size());
        if (limit_ >= 0 && best_ > limit_) stop_ = true;
      }
      return;
    }
    // greedy coloring bound: color[i] = class index + 1
    std::vector<int> color(verts.size());
    std::vector<VertexSet> classes;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      int v = verts[i];
      std::size_t c = 0;
      while (c < classes.size() && classes[c].intersects(g_.adj[v])) ++c;
      if (c == classes.size()) classes.emplace_back(g_.n);
      classes[c].set(v);
      color[i] = static_cast<int>(c) + 1;
    }
    std::vector<std::size_t> order(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });
    VertexSet remaining = candidates;
    for (std::size_t oi = order.size(); oi-- > 0;) {
      if (stop_) return;
      int v = verts[order[oi]];
      if (static_cast<int>(cur_.size()) + color[order[oi]] <= best_) return;
      cur_.push_back(v);
      VertexSet next = remaining & g_.adj[v];
      if (next.none()) {
        if (static_cast<int>(cur_.size()) > best_) {
          best_ = static_cast<int>(cur_.size());
          if (limit_ >= 0 && best_ > limit_) stop_ = true;
        }
      } else {
        expand(next);
      }
      cur_.pop_back();
      remaining.reset(v);
    }
  }

  const Graph& g_;
  int best_ = 0;
  int limit_ = -1;
  bool stop_ = false;
  std::vector<int> cur_;
};

// Lexicographically smallest clique of the given size, found by always
// extending with the smallest feasible vertex.
inline bool lex_clique(const Graph& g, const VertexSet& candidates, int need,
                       std::vector<int>& out) {
  if (need == 0) return true;
  if (candidates.count() < need) return false;
  for (int v = candidates.next(0); v >= 0; v = candidates.next(v + 1)) {
    VertexSet next = candidates & g.adj[v];
    // only larger labels keep the output sorted ascending
    for (int u = next.next(0); u >= 0 && u <= v; u = next.next(u + 1)) next.reset(u);
    out.push_back(v);
    if (lex_clique(g, next, need - 1, out)) return true;
    out.pop_back();
  }
  return false;
}

}  // namespace detail

/// nu(G) with a witness matching, by the blossom algorithm.
inline std::pair<int, Matching> matching_number(const Graph& g) {
  Matching m = detail::BlossomMatcher(g).solve();
  return {static_cast<int>(m.pairs.size()), std::move(m)};
}

/// Independent nu oracle: DP over vertex subsets, n <= 22.
inline int matching_number_oracle(const Graph& g) {
  if (g.n > 22) throw capacity_error("matching_number_oracle: n > 22");
  if (g.n == 0) return 0;
  std::vector<std::uint32_t> adj(g.n, 0);
  for (int u = 0; u < g.n; ++u)
    for (int v = g.adj[u].next(0); v >= 0; v = g.adj[u].next(v + 1))
      adj[u] |= std::uint32_t{1} << v;
  std::vector<std::int8_t> f(std::size_t{1} << g.n, 0);
  for (std::uint32_t S = 1; S < (std::uint32_t{1} << g.n); ++S) {
    int v = std::countr_zero(S);
    std::uint32_t rest = S & (S - 1);
    std::int8_t best = f[rest];
    for (std::uint32_t nb = adj[v] & rest; nb; nb &= nb - 1) {
      int u = std::countr_zero(nb);
      std::int8_t cand =
          static_cast<std::int8_t>(1 + f[rest & ~(std::uint32_t{1} << u)]);
      if (cand > best) best = cand;
    }
    f[S] = best;
  }
  return f[(std::uint32_t{1} << g.n) - 1];
}

/// omega(G) with the lexicographically smallest witness clique.
inline std::pair<int, std::vector<int>> clique_number(const Graph& g) {
  if (g.n > 128) throw capacity_error("clique_number: n > 128");
  if (g.n == 0) return {0, {}};
  int omega = detail::CliqueSearch(g).run();
  std::vector<int> witness;
  VertexSet all(g.n);
  for (int v = 0; v < g.n; ++v) all.set(v);
  detail::lex_clique(g, all, omega, witness);
  return {omega, std::move(witness)};
}

/// True iff omega(G) <= k; short-circuits once any (k+1)-clique is found.
inline bool is_k_clique_free(const Graph& g, int k) {
  if (g.n > 128) throw capacity_error("is_k_clique_free: n > 128");
  if (k >= g.n) return true;
  return detail::CliqueSearch(g).run(k) <= k;
}

/// Maximum-deficiency Tutte–Berge witness by enumeration of all B, n <= 16.
/// Ties broken by smallest |B|, then lexicographically smallest B.
inline TutteBergeWitness tutte_berge_max_deficiency(const Graph& g) {
  if (g.n > 16) throw capacity_error("tutte_berge_max_deficiency: n > 16");
  int n = g.n;
  std::vector<std::uint32_t> adj(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = g.adj[u].next(0); v >= 0; v = g.adj[u].next(v + 1))
      adj[u] |= std::uint32_t{1} << v;
  std::uint32_t full = n == 0 ? 0 : (std::uint32_t{1} << n) - 1;

  auto component_sizes = [&](std::uint32_t rem) {
    std::vector<int> sizes;
    while (rem) {
      std::uint32_t comp = rem & (~rem + 1);  // seed: lowest remaining vertex
      std::uint32_t frontier = comp;
      while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1)
          next |= adj[std::countr_zero(f)];
        next &= rem & ~comp;
        comp |= next;
        frontier = next;
      }
      sizes.push_back(std::popcount(comp));
      rem &= ~comp;
    }
    return sizes;
  };

  auto set_lex_less = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  };

  int best_def = -n - 1;
  std::vector<int> best_B;
  TutteBergeWitness best{};
  bool have = false;
  for (std::uint32_t Bmask = 0; Bmask <= full || (n == 0 && Bmask == 0); ++Bmask) {
    int b = std::popcount(Bmask);
    std::vector<int> sizes = component_sizes(full & ~Bmask);
    int odd = 0;
    long long halves = 0;
    for (int sz : sizes) {
      if (sz & 1) ++odd;
      halves += sz / 2;
    }
    int def = odd - b;
    if (have && def < best_def) {
      if (Bmask == full) break;
      continue;
    }
    std::vector<int> Bvec;
    for (std::uint32_t t = Bmask; t; t &= t - 1) Bvec.push_back(std::countr_zero(t));
    bool better = !have || def > best_def ||
                  (def == best_def &&
                   (b < static_cast<int>(best_B.size()) ||
                    (b == static_cast<int>(best_B.size()) && set_lex_less(Bvec, best_B))));
    if (better) {
      best_def = def;
      best_B = Bvec;
      best.B = Bvec;
      best.odd_components.clear();
      for (int sz : sizes)
        if (sz & 1) best.odd_components.push_back(sz);
      std::sort(best.odd_components.rbegin(), best.odd_components.rend());
      best.bound = b + halves;
      have = true;
    }
    if (Bmask == full) break;
  }
  return best;
}

/// Gallai–Edmonds partition via inessential vertices: n+1 blossom runs.
inline GallaiEdmonds gallai_edmonds(const Graph& g) {
  if (g.n > 512) throw capacity_error("gallai_edmonds: n > 512");
  int nu = matching_number(g).first;
  GallaiEdmonds out;
  VertexSet inD(g.n);
  std::vector<int> rest;
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> others;
    others.reserve(g.n - 1);
    for (int u = 0; u < g.n; ++u)
      if (u != v) others.push_back(u);
    if (matching_number(induced_subgraph(g, others).first).first == nu) {
      out.D.push_back(v);
      inD.set(v);
    }
  }
  VertexSet inA(g.n);
  for (int d : out.D)
    for (int u = g.adj[d].next(0); u >= 0; u = g.adj[d].next(u + 1))
      if (!inD.test(u)) inA.set(u);
  out.A = inA.to_vector();
  for (int v = 0; v < g.n; ++v)
    if (!inD.test(v) && !inA.test(v)) out.C.push_back(v);
  return out;
}

}  // namespace exgraph
