#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "exgraph/formulas.hpp"
#include "exgraph/graph.hpp"
#include "exgraph/invariants.hpp"

namespace exgraph {

/// Zykov move: G' with N'(u) = N(v), everything else unchanged.
/// Requires u, v distinct and non-adjacent; |E'| = |E| - d(u) + d(v).
inline Graph replace_neighborhood(const Graph& g, int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= g.n || v >= g.n)
    throw std::invalid_argument("replace_neighborhood: bad vertex pair");
  if (g.has_edge(u, v))
    throw std::invalid_argument("replace_neighborhood: u and v must be non-adjacent");
  Graph out = g;
  for (int w = out.adj[u].next(0); w >= 0; w = out.adj[u].next(w + 1))
    out.adj[w].reset(u);
  out.m -= out.adj[u].count();
  out.adj[u] = g.adj[v];
  for (int w = out.adj[u].next(0); w >= 0; w = out.adj[u].next(w + 1))
    out.adj[w].set(u);
  out.m += out.adj[u].count();
  return out;
}

/// Checkable form of the clique-monotonicity guarantee: recomputes omega
/// on both sides and reports whether the move kept it from growing.
inline bool clique_safe(const Graph& g, int u, int v) {
  return clique_number(replace_neighborhood(g, u, v)).first <=
         clique_number(g).first;
}

namespace detail {

inline std::vector<int> component_sizes_without(const Graph& g,
                                                const std::vector<int>& removed) {
  VertexSet gone(g.n);
  for (int v : removed) {
    if (v < 0 || v >= g.n || gone.test(v))
      throw std::invalid_argument("invalid witness vertex set");
    gone.set(v);
  }
  std::vector<int> sizes;
  VertexSet seen = gone;
  for (int start = 0; start < g.n; ++start) {
    if (seen.test(start)) continue;
    VertexSet comp(g.n);
    comp.set(start);
    VertexSet frontier = comp;
    while (frontier.any()) {
      VertexSet next(g.n);
      for (int v = frontier.next(0); v >= 0; v = frontier.next(v + 1))
        next |= g.adj[v];
      next -= comp;
      next -= gone;
      comp |= next;
      frontier = next;
    }
    sizes.push_back(comp.count());
    seen |= comp;
  }
  return sizes;
}

inline void validate_witness(const Graph& g, const TutteBergeWitness& w) {
  std::vector<int> sizes = component_sizes_without(g, w.B);
  std::vector<int> odd;
  long long halves = 0;
  for (int sz : sizes) {
    if (sz & 1) odd.push_back(sz);
    halves += sz / 2;
  }
  std::sort(odd.rbegin(), odd.rend());
  std::vector<int> claimed = w.odd_components;
  std::sort(claimed.rbegin(), claimed.rend());
  if (odd != claimed ||
      w.bound != static_cast<long long>(w.B.size()) + halves)
    throw std::invalid_argument("witness does not match graph");
}

}  // namespace detail

/// Symmetrize inside the witness set B: replace lower-degree ends of
/// non-adjacent pairs until non-adjacency on B is an equivalence
/// relation. Edge count never decreases; G - B is untouched, so B stays
/// a witness with the same bound.
inline Graph symmetrize_within(const Graph& g, const TutteBergeWitness& witness) {
  detail::validate_witness(g, witness);
  Graph cur = g;
  const std::vector<int>& B = witness.B;
  bool changed = true;
  while (changed) {
    changed = false;
    // single moves: strictly increasing whenever degrees differ
    for (std::size_t i = 0; i < B.size() && !changed; ++i) {
      for (std::size_t j = 0; j < B.size() && !changed; ++j) {
        int u = B[i], v = B[j];
        if (u == v || cur.has_edge(u, v)) continue;
        if (cur.degree(u) < cur.degree(v)) {
          cur = replace_neighborhood(cur, u, v);
          changed = true;
        }
      }
    }
    if (changed) continue;
    // all non-adjacent pairs in B now have equal degrees; resolve any
    // transitivity violation u~v fails, u~w fails, v~w edge by copying
    // N(u) onto both v and w (strict gain of one edge)
    for (std::size_t i = 0; i < B.size() && !changed; ++i) {
      for (std::size_t j = 0; j < B.size() && !changed; ++j) {
        for (std::size_t l = j + 1; l < B.size() && !changed; ++l) {
          int u = B[i], v = B[j], w = B[l];
          if (u == v || u == w) continue;
          if (!cur.has_edge(u, v) && !cur.has_edge(u, w) && cur.has_edge(v, w)) {
            cur = replace_neighborhood(cur, v, u);
            cur = replace_neighborhood(cur, w, u);
            changed = true;
          }
        }
      }
    }
  }
  return cur;
}

struct SearchState {
  Graph graph;
  int k, s;
  long long best_edges;
  std::optional<TutteBergeWitness> witness_B;
  std::vector<std::string> history;
};

struct RestartResult {
  int restart_id;
  std::uint64_t seed;
  long long best_edges;
};

struct SearchResult {
  SearchState best;
  std::vector<RestartResult> restarts;
};

namespace detail {

inline bool search_valid(const Graph& g, int k, int s) {
  return is_k_clique_free(g, k) && matching_number(g).first <= s;
}

// one restart of the constraint-preserving local search
inline Graph search_restart(int n, int k, int s, std::uint64_t rseed,
                            int iters, bool perturb, long long target,
                            std::vector<std::string>& history) {
  std::mt19937_64 rng(rseed);
  // G(n,1,s) is undefined for s > 0; every clique-1 graph is edgeless anyway
  Graph g = k == 1 ? Graph(n) : make_gks(n, k, s).first;

  auto rand01 = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  auto greedy_fill = [&](Graph& cur) {
    std::vector<std::pair<int, int>> nonedges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!cur.has_edge(u, v)) nonedges.emplace_back(u, v);
    std::shuffle(nonedges.begin(), nonedges.end(), rng);
    for (auto [u, v] : nonedges) {
      if (cur.has_edge(u, v)) continue;
      cur.add_edge(u, v);
      if (search_valid(cur, k, s)) {
        history.push_back("add " + std::to_string(u) + " " + std::to_string(v));
      } else {
        cur.remove_edge(u, v);
      }
    }
  };

  // lexicographic scan for the first strictly improving replace move,
  // revalidated with the blossom algorithm after every application
  auto replace_pass = [&](Graph& cur) {
    bool any = false, found = true;
    while (found) {
      found = false;
      for (int u = 0; u < n && !found; ++u) {
        for (int v = 0; v < n && !found; ++v) {
          if (u == v || cur.has_edge(u, v)) continue;
          if (cur.degree(v) <= cur.degree(u)) continue;
          Graph moved = replace_neighborhood(cur, u, v);
          if (search_valid(moved, k, s)) {
            cur = std::move(moved);
            history.push_back("replace " + std::to_string(u) + " " +
                              std::to_string(v));
            found = any = true;
          }
        }
      }
    }
    return any;
  };

  if (perturb) {
    for (auto [u, v] : g.edges())
      if (rand01() < 0.35) g.remove_edge(u, v);
    history.push_back("perturb");
  }
  greedy_fill(g);
  replace_pass(g);
  greedy_fill(g);

  Graph best = g;
  if (target >= 0 && best.m >= target) return best;
  for (int it = 0; it < iters && g.m > 0; ++it) {
    auto es = g.edges();
    auto [du, dv] = es[rng() % es.size()];
    g.remove_edge(du, dv);
    history.push_back("del " + std::to_string(du) + " " + std::to_string(dv));
    for (int t = 0; t < 2 * n; ++t) {
      int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
      if (u == v || g.has_edge(u, v)) continue;
      if (u > v) std::swap(u, v);
      g.add_edge(u, v);
      if (search_valid(g, k, s)) {
        history.push_back("add " + std::to_string(u) + " " + std::to_string(v));
      } else {
        g.remove_edge(u, v);
      }
    }
    if (g.m > best.m) best = g;
    if (target >= 0 && best.m >= target) break;
  }
  replace_pass(best);
  greedy_fill(best);
  return best;
}

}  // namespace detail

/// Heuristic extremal search: seeded restarts from G(n,k,s), Zykov
/// replace moves plus greedy constraint-preserving edge additions.
/// Restart 0 starts unperturbed. `target` (optional) stops the search
/// once the known formula value is reached; -1 disables the early exit.
inline SearchResult local_search(int n, int k, int s, std::uint64_t seed,
                                 int iters, int restarts = 50,
                                 long long target = -1) {
  if (n < 1 || n > 64) throw std::invalid_argument("local_search: need 1 <= n <= 64");
  if (iters < 0) throw std::invalid_argument("local_search: iters must be >= 0");
  if (restarts < 1) restarts = 1;

  SearchResult result;
  Graph best;
  std::vector<std::string> best_history;
  for (int r = 0; r < restarts; ++r) {
    std::uint64_t rseed = seed ^ (0x9E3779B97F4A7C15ULL * (r + 1));
    std::vector<std::string> history;
    Graph cand = detail::search_restart(n, k, s, rseed, iters, r > 0, target, history);
    result.restarts.push_back({r, rseed, cand.m});
    bool take = best.n == 0 || cand.m > best.m ||
                (cand.m == best.m && cand.edges() < best.edges());
    if (take) {
      best = std::move(cand);
      best_history = std::move(history);
    }
    if (target >= 0 && best.m >= target) break;
  }

  SearchState state{best, k, s, best.m, std::nullopt, std::move(best_history)};
  if (n <= 16) state.witness_B = tutte_berge_max_deficiency(best);
  result.best = std::move(state);
  return result;
}

/// CSV report: one row per restart, matched against the formula value.
inline std::string search_csv(const SearchResult& result, long long formula_value) {
  std::ostringstream out;
  out << "restart_id,seed,best_edges,formula_value,match\n";
  for (const auto& r : result.restarts) {
    out << r.restart_id << ',' << r.seed << ',' << r.best_edges << ','
        << formula_value << ',' << (r.best_edges == formula_value ? "yes" : "no")
        << '\n';
  }
  return out.str();
}

}  // namespace exgraph
