#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "exgraph/graph.hpp"
#include "exgraph/invariants.hpp"
#include "exgraph/oracle.hpp"

namespace exgraph {

namespace detail {

// k-colorability by backtracking; vertices pre-ordered by degree,
// new colors introduced in index order to kill color permutations.
class Colorability {
 public:
  Colorability(const Graph& g, int k) : g_(g), k_(k), color_(g.n, -1) {
    order_.resize(g.n);
    for (int v = 0; v < g.n; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return g_.degree(a) > g_.degree(b);
    });
  }

  bool run() { return g_.n == 0 ? true : place(0, 0); }

 private:
  bool place(int idx, int used) {
    if (idx == g_.n) return true;
    int v = order_[idx];
    int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      bool clash = false;
      for (int u = g_.adj[v].next(0); u >= 0; u = g_.adj[v].next(u + 1)) {
        if (color_[u] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color_[v] = c;
      if (place(idx + 1, std::max(used, c + 1))) return true;
      color_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> color_;
  std::vector<int> order_;
};

inline bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.n, -1);
  for (int start = 0; start < g.n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = g.adj[v].next(0); u >= 0; u = g.adj[v].next(u + 1)) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace detail

/// Exact chi(G), n <= 16. chi of the null graph is 0, of any edgeless
/// graph with vertices is 1.
inline int chromatic_number(const Graph& g) {
  if (g.n > 16) throw capacity_error("chromatic_number: n > 16");
  if (g.n == 0) return 0;
  if (g.m == 0) return 1;
  int lb = clique_number(g).first;
  for (int k = lb; k <= g.n; ++k)
    if (detail::Colorability(g, k).run()) return k;
  return g.n;  // unreachable: n colors always suffice
}

/// True with the first (lexicographically) edge whose deletion lowers chi.
inline std::pair<bool, std::optional<std::pair<int, int>>> is_color_critical(
    const Graph& h) {
  if (h.m == 0) throw std::invalid_argument("is_color_critical: edgeless graph");
  if (h.n > 16) throw capacity_error("is_color_critical: n > 16");
  int chi = chromatic_number(h);
  for (auto [u, v] : h.edges()) {
    Graph reduced = h;
    reduced.remove_edge(u, v);
    if (chromatic_number(reduced) < chi) return {true, std::make_pair(u, v)};
  }
  return {false, std::nullopt};
}

/// Not-necessarily-induced subgraph containment, |V(H)| <= 8, |V(G)| <= 64.
/// Backtracking over injective maps with per-vertex candidate domains,
/// forward checking, and smallest-domain-first ordering.
inline bool contains_subgraph(const Graph& g, const Graph& h) {
  if (h.n > 8) throw capacity_error("contains_subgraph: |V(H)| > 8");
  if (g.n > 64) throw capacity_error("contains_subgraph: |V(G)| > 64");
  if (h.n > g.n || h.m > g.m) return false;
  if (h.n == 0) return true;
  // subgraphs of bipartite graphs are bipartite; forward checking alone
  // detects odd-cycle parity failures too late
  if (!detail::is_bipartite(h) && detail::is_bipartite(g)) return false;

  std::vector<VertexSet> domain(h.n, VertexSet(g.n));
  for (int hv = 0; hv < h.n; ++hv)
    for (int gv = 0; gv < g.n; ++gv)
      if (g.degree(gv) >= h.degree(hv)) domain[hv].set(gv);

  std::uint8_t unmapped = static_cast<std::uint8_t>((1u << h.n) - 1);

  auto backtrack = [&](auto&& self, std::uint8_t todo,
                       const std::vector<VertexSet>& dom) -> bool {
    if (todo == 0) return true;
    int hv = -1, best = -1;
    for (std::uint8_t t = todo; t; t &= t - 1) {
      int v = std::countr_zero(t);
      int size = dom[v].count();
      if (size == 0) return false;
      if (hv == -1 || size < best) hv = v, best = size;
    }
    std::uint8_t rest = todo & ~static_cast<std::uint8_t>(1u << hv);
    for (int gv = dom[hv].next(0); gv >= 0; gv = dom[hv].next(gv + 1)) {
      std::vector<VertexSet> next = dom;
      bool dead = false;
      for (std::uint8_t t = rest; t; t &= t - 1) {
        int u = std::countr_zero(t);
        next[u].reset(gv);
        if (h.has_edge(hv, u)) next[u] &= g.adj[gv];
        if (next[u].none()) {
          dead = true;
          break;
        }
      }
      if (!dead && self(self, rest, next)) return true;
    }
    return false;
  };
  return backtrack(backtrack, unmapped, domain);
}

/// Max edges over all labeled n-vertex graphs with no subgraph copy of H
/// and matching number <= s, by exhaustive enumeration, n <= 8.
inline long long hfree_oracle(int n, const Graph& h, int s) {
  if (n < 1 || n > detail::kOracleMaxN)
    throw capacity_error("hfree_oracle: need 1 <= n <= 8");
  if (h.n > 8) throw capacity_error("hfree_oracle: |V(H)| > 8");
  if (s < 0) throw std::invalid_argument("hfree_oracle: s must be nonnegative");
  auto pairs = detail::pair_table(n);
  int nbits = static_cast<int>(pairs.size());
  std::array<std::uint32_t, 8> adj{};
  std::vector<std::int8_t> match_scratch(std::size_t{1} << n);
  long long best = -1;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << nbits); ++mask) {
    long long m = std::popcount(mask);
    if (m <= best) continue;
    detail::adj_from_mask(n, mask, pairs, adj);
    if (detail::small_matching_number(n, adj, match_scratch) > s) continue;
    if (contains_subgraph(graph_from_edge_mask(n, mask), h)) continue;
    best = m;
  }
  return best;
}

enum class PropStatus { EQUAL, ORACLE_LARGER, ORACLE_SMALLER };

inline const char* to_string(PropStatus s) {
  switch (s) {
    case PropStatus::EQUAL: return "EQUAL";
    case PropStatus::ORACLE_LARGER: return "ORACLE_LARGER";
    case PropStatus::ORACLE_SMALLER: return "ORACLE_SMALLER";
  }
  return "?";
}

/// Forbidden subgraph plus its derived coloring data.
struct ForbiddenPattern {
  Graph h;
  int chi;
  bool critical;
  std::optional<std::pair<int, int>> critical_edge;
  int k;  // chi - 1
};

inline ForbiddenPattern make_pattern(const Graph& h) {
  ForbiddenPattern p;
  p.h = h;
  p.chi = chromatic_number(h);
  if (h.m > 0) {
    auto [crit, edge] = is_color_critical(h);
    p.critical = crit;
    p.critical_edge = edge;
  } else {
    p.critical = false;
  }
  p.k = p.chi - 1;
  return p;
}

struct PropositionReport {
  int n, s, chi;
  long long oracle_value;
  long long g_value;  // g(n, chi-1, s)
  PropStatus status;
};

/// Compare the brute-force H-free maximum against g(n, chi(H)-1, s).
/// ORACLE_LARGER is the expected outcome below the asymptotic regime;
/// ORACLE_SMALLER would contradict the construction lower bound.
inline PropositionReport verify_proposition(const Graph& h, int n, int s) {
  ForbiddenPattern p = make_pattern(h);
  if (!p.critical || p.chi <= 2)
    throw std::invalid_argument(
        "verify_proposition: H must be color-critical with chi > 2");
  if (s > n) throw std::invalid_argument("verify_proposition: need s <= n");
  PropositionReport report;
  report.n = n;
  report.s = s;
  report.chi = p.chi;
  report.oracle_value = hfree_oracle(n, h, s);
  report.g_value = g_edges(n, p.k, s);
  report.status = report.oracle_value == report.g_value ? PropStatus::EQUAL
                  : report.oracle_value > report.g_value
                      ? PropStatus::ORACLE_LARGER
                      : PropStatus::ORACLE_SMALLER;
  return report;
}

}  // namespace exgraph
