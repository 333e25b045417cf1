#pragma once

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "exgraph/formulas.hpp"
#include "exgraph/graph.hpp"

namespace exgraph {

/// Per-n table of max edge counts over all graphs with omega <= k and
/// nu <= s, plus one witness edge-bitmask per cell (smallest such mask).
struct OracleTable {
  int n = 0;
  // indexed [k][s], k in 0..n (k=0 unused), s in 0..floor(n/2)
  std::vector<std::vector<long long>> max_edges;
  std::vector<std::vector<std::uint32_t>> witness;
};

namespace detail {

inline constexpr int kOracleMaxN = 8;

// lexicographic pair order: (0,1),(0,2),...,(0,n-1),(1,2),...
inline std::vector<std::pair<int, int>> pair_table(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

inline void adj_from_mask(int n, std::uint32_t mask,
                          const std::vector<std::pair<int, int>>& pairs,
                          std::array<std::uint32_t, 8>& adj) {
  adj.fill(0);
  for (std::uint32_t t = mask; t; t &= t - 1) {
    auto [u, v] = pairs[std::countr_zero(t)];
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
}

// omega by subset DP: S is a clique iff S minus its lowest vertex is a
// clique contained in that vertex's neighborhood.
inline int small_clique_number(int n, const std::array<std::uint32_t, 8>& adj,
                               std::vector<std::uint8_t>& clique_scratch) {
  std::uint32_t full = (std::uint32_t{1} << n) - 1;
  clique_scratch[0] = 1;
  int omega = n > 0 ? 1 : 0;
  for (std::uint32_t S = 1; S <= full; ++S) {
    int v = std::countr_zero(S);
    std::uint32_t rest = S & (S - 1);
    bool ok = clique_scratch[rest] && (rest & ~adj[v]) == 0;
    clique_scratch[S] = ok;
    if (ok) omega = std::max(omega, std::popcount(S));
  }
  return omega;
}

// nu by subset DP over the lowest vertex of each subset.
inline int small_matching_number(int n, const std::array<std::uint32_t, 8>& adj,
                                 std::vector<std::int8_t>& f) {
  std::uint32_t full = n > 0 ? (std::uint32_t{1} << n) - 1 : 0;
  f[0] = 0;
  for (std::uint32_t S = 1; S <= full; ++S) {
    int v = std::countr_zero(S);
    std::uint32_t rest = S & (S - 1);
    std::int8_t best = f[rest];
    for (std::uint32_t nb = adj[v] & rest; nb; nb &= nb - 1) {
      std::int8_t cand = static_cast<std::int8_t>(
          1 + f[rest & ~(std::uint32_t{1} << std::countr_zero(nb))]);
      if (cand > best) best = cand;
    }
    f[S] = best;
  }
  return f[full];
}

// Classical Erdos–Gallai closed form, used only as a pruning threshold.
inline long long eg_closed_form(long long n, long long s) {
  if (n <= 2 * s + 1) return choose2(n);
  return std::max(choose2(2 * s + 1), choose2(s) + s * (n - s));
}

struct WorkerTable {
  int n, smax;
  std::vector<std::vector<long long>> raw;       // [k][s], -1 = empty
  std::vector<std::vector<std::uint32_t>> wit;   // valid where raw >= 0
  std::vector<std::vector<long long>> closure;   // running dominated max

  explicit WorkerTable(int n_) : n(n_), smax(n_ / 2) {
    raw.assign(n + 1, std::vector<long long>(smax + 1, -1));
    wit.assign(n + 1, std::vector<std::uint32_t>(smax + 1, 0));
    closure.assign(n + 1, std::vector<long long>(smax + 1, -1));
  }

  void record(int omega, int nu, long long m, std::uint32_t mask) {
    if (m > raw[omega][nu]) {
      raw[omega][nu] = m;
      wit[omega][nu] = mask;
      for (int k = omega; k <= n; ++k)
        for (int s = nu; s <= smax; ++s)
          if (m > closure[k][s]) closure[k][s] = m;
    }
  }
};

inline void enumerate_range(int n, std::uint32_t lo, std::uint32_t hi, bool prune,
                            const std::vector<std::pair<int, int>>& pairs,
                            const std::vector<int>& kmin,
                            const std::vector<int>& smin, WorkerTable& table) {
  std::array<std::uint32_t, 8> adj{};
  std::vector<std::uint8_t> clique_scratch(std::size_t{1} << n);
  std::vector<std::int8_t> match_scratch(std::size_t{1} << n);
  for (std::uint32_t mask = lo; mask < hi; ++mask) {
    int m = std::popcount(mask);
    if (prune && static_cast<long long>(m) <= table.closure[kmin[m]][smin[m]])
      continue;
    adj_from_mask(n, mask, pairs, adj);
    int omega = small_clique_number(n, adj, clique_scratch);
    int nu = small_matching_number(n, adj, match_scratch);
    table.record(omega, nu, m, mask);
  }
}

}  // namespace detail

/// One exhaustive pass over all 2^C(n,2) labeled graphs, 1 <= n <= 8.
/// Result is independent of thread count and of the popcount prune.
inline OracleTable enumerate_oracle(int n, int thread_hint = 1, bool prune = true) {
  if (n < 1 || n > detail::kOracleMaxN)
    throw capacity_error("enumerate_oracle: need 1 <= n <= 8");
  auto pairs = detail::pair_table(n);
  int nbits = static_cast<int>(pairs.size());
  std::uint64_t total = std::uint64_t{1} << nbits;
  int smax = n / 2;

  // prune thresholds: a graph with m edges has omega >= kmin[m] (Turan)
  // and nu >= smin[m] (Erdos–Gallai)
  std::vector<int> kmin(nbits + 1, 1), smin(nbits + 1, 0);
  for (int m = 0; m <= nbits; ++m) {
    while (turan_edges(n, kmin[m]) < m) ++kmin[m];
    while (detail::eg_closed_form(n, smin[m]) < m) ++smin[m];
    if (m < nbits) {
      kmin[m + 1] = kmin[m];
      smin[m + 1] = smin[m];
    }
  }

  int workers = std::max(1, thread_hint);
  if (static_cast<std::uint64_t>(workers) > total) workers = static_cast<int>(total);
  std::vector<detail::WorkerTable> tables(workers, detail::WorkerTable(n));
  if (workers == 1) {
    detail::enumerate_range(n, 0, static_cast<std::uint32_t>(total), prune, pairs,
                            kmin, smin, tables[0]);
  } else {
    std::vector<std::thread> threads;
    std::uint64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      std::uint64_t lo = w * chunk, hi = std::min(total, lo + chunk);
      threads.emplace_back([&, w, lo, hi] {
        detail::enumerate_range(n, static_cast<std::uint32_t>(lo),
                                static_cast<std::uint32_t>(hi), prune, pairs, kmin,
                                smin, tables[w]);
      });
    }
    for (auto& t : threads) t.join();
  }

  // merge raw cells: larger value wins, ties to the smaller bitmask
  detail::WorkerTable merged(n);
  for (const auto& t : tables) {
    for (int k = 1; k <= n; ++k) {
      for (int s = 0; s <= smax; ++s) {
        if (t.raw[k][s] < 0) continue;
        if (t.raw[k][s] > merged.raw[k][s] ||
            (t.raw[k][s] == merged.raw[k][s] && t.wit[k][s] < merged.wit[k][s]))
          merged.raw[k][s] = t.raw[k][s], merged.wit[k][s] = t.wit[k][s];
      }
    }
  }

  // prefix-max closure so cell (k,s) covers all omega <= k, nu <= s
  OracleTable out;
  out.n = n;
  out.max_edges.assign(n + 1, std::vector<long long>(smax + 1, -1));
  out.witness.assign(n + 1, std::vector<std::uint32_t>(smax + 1, 0));
  for (int k = 1; k <= n; ++k) {
    for (int s = 0; s <= smax; ++s) {
      long long best = merged.raw[k][s];
      std::uint32_t wit = merged.wit[k][s];
      auto consider = [&](long long v, std::uint32_t w) {
        if (v > best || (v == best && v >= 0 && w < wit)) best = v, wit = w;
      };
      if (k > 1) consider(out.max_edges[k - 1][s], out.witness[k - 1][s]);
      if (s > 0) consider(out.max_edges[k][s - 1], out.witness[k][s - 1]);
      out.max_edges[k][s] = best;
      out.witness[k][s] = wit;
    }
  }
  return out;
}

/// Rebuild the witness graph of a table cell from its edge-bitmask.
inline Graph graph_from_edge_mask(int n, std::uint32_t mask) {
  auto pairs = detail::pair_table(n);
  Graph g(n);
  for (std::uint32_t t = mask; t; t &= t - 1) {
    auto [u, v] = pairs[std::countr_zero(t)];
    g.add_edge(u, v);
  }
  return g;
}

struct TheoremCell {
  int n, k, s;
  long long oracle_value;
  ExtremalResult formula;
  std::uint32_t witness;
  bool ok;
};

struct TheoremReport {
  int n_max;
  bool pass;
  std::vector<TheoremCell> cells;
};

/// Compare every oracle cell against the closed-form maximum.
inline TheoremReport verify_theorem(int n_max, int thread_hint = 1) {
  if (n_max < 1 || n_max > detail::kOracleMaxN)
    throw capacity_error("verify_theorem: need 1 <= n_max <= 8");
  TheoremReport report{n_max, true, {}};
  for (int n = 1; n <= n_max; ++n) {
    OracleTable table = enumerate_oracle(n, thread_hint);
    for (int k = 1; k <= n; ++k) {
      for (int s = 0; s <= n / 2; ++s) {
        TheoremCell cell;
        cell.n = n;
        cell.k = k;
        cell.s = s;
        cell.oracle_value = table.max_edges[k][s];
        cell.formula = ex_edges(n, k, s);
        cell.witness = table.witness[k][s];
        cell.ok = cell.oracle_value == cell.formula.value;
        if (!cell.ok) report.pass = false;
        report.cells.push_back(cell);
      }
    }
  }
  return report;
}

/// CSV export: one row per verified cell.
inline std::string theorem_csv(const TheoremReport& report) {
  std::ostringstream out;
  out << "n,k,s,max_edges,formula,turan_branch,gks_branch,status\n";
  for (const auto& c : report.cells) {
    out << c.n << ',' << c.k << ',' << c.s << ',' << c.oracle_value << ','
        << c.formula.value << ',' << c.formula.turan_branch << ','
        << c.formula.gks_branch << ',' << (c.ok ? "PASS" : "FAIL") << '\n';
  }
  return out.str();
}

}  // namespace exgraph
