#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace exgraph {

inline constexpr long long kMaxFormulaN = 1LL << 31;

namespace detail {

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("edge-count arithmetic overflow");
  return r;
}

inline long long choose2(long long n) { return checked_mul(n, n - 1) / 2; }

inline void check_n(long long n, const char* op) {
  if (n < 0 || n > kMaxFormulaN)
    throw std::invalid_argument(std::string(op) + ": n out of range");
}

}  // namespace detail

/// Which branch of the two-term maximum attains the extremal value.
enum class Winner { TURAN, GKS, TIE, SMALL_N };

inline const char* to_string(Winner w) {
  switch (w) {
    case Winner::TURAN: return "TURAN";
    case Winner::GKS: return "GKS";
    case Winner::TIE: return "TIE";
    case Winner::SMALL_N: return "SMALL_N";
  }
  return "?";
}

struct ExtremalResult {
  long long n, k, s;
  long long turan_branch;  // t(2s+1, k)
  long long gks_branch;    // g(n, k, s)
  long long value;
  Winner winner;
};

/// t(n,k): edges of the Turan graph T(n,k).
inline long long turan_edges(long long n, long long k) {
  detail::check_n(n, "turan_edges");
  if (k < 1) throw std::invalid_argument("turan_edges: k must be positive");
  long long q = n / k, r = n % k;
  return detail::choose2(n) - detail::checked_mul(r, detail::choose2(q + 1)) -
         detail::checked_mul(k - r, detail::choose2(q));
}

/// g(n,k,s): edges of G(n,k,s); 0 when k = 1.
inline long long g_edges(long long n, long long k, long long s) {
  detail::check_n(n, "g_edges");
  if (k < 1) throw std::invalid_argument("g_edges: k must be positive");
  if (s < 0 || s > n) throw std::invalid_argument("g_edges: need 0 <= s <= n");
  if (k == 1) return 0;
  return turan_edges(s, k - 1) + detail::checked_mul(s, n - s);
}

/// Theorem value: max edges with n vertices, clique number <= k and
/// matching number <= s. Reports both branches and which one wins.
inline ExtremalResult ex_edges(long long n, long long k, long long s) {
  detail::check_n(n, "ex_edges");
  if (k < 1) throw std::invalid_argument("ex_edges: k must be positive");
  if (s < 0) throw std::invalid_argument("ex_edges: s must be nonnegative");
  ExtremalResult res{n, k, s, 0, 0, 0, Winner::SMALL_N};
  if (n <= 2 * s + 1) {
    res.turan_branch = turan_edges(n, k);
    res.gks_branch = g_edges(n, k, std::min(s, n));
    res.value = res.turan_branch;
    res.winner = Winner::SMALL_N;
    return res;
  }
  res.turan_branch = turan_edges(2 * s + 1, k);
  res.gks_branch = g_edges(n, k, s);
  res.value = std::max(res.turan_branch, res.gks_branch);
  res.winner = res.turan_branch == res.gks_branch ? Winner::TIE
               : res.turan_branch > res.gks_branch ? Winner::TURAN
                                                   : Winner::GKS;
  return res;
}

/// Erdos–Gallai specialization: clique constraint made vacuous.
inline long long erdos_gallai_edges(long long n, long long s) {
  detail::check_n(n, "erdos_gallai_edges");
  if (s < 0) throw std::invalid_argument("erdos_gallai_edges: s must be nonnegative");
  return ex_edges(n, std::max(n, 1LL), s).value;
}

/// Case-4 bound f(b) = t(2s-b+1,k) + b(n-2s+b-1).
inline long long case4_f(long long n, long long k, long long s, long long b) {
  detail::check_n(n, "case4_f");
  if (k < 1) throw std::invalid_argument("case4_f: k must be positive");
  if (b < 0 || b > s) throw std::invalid_argument("case4_f: need 0 <= b <= s");
  if (n < 2 * s + 1) throw std::invalid_argument("case4_f: need n >= 2s+1");
  return turan_edges(2 * s - b + 1, k) +
         detail::checked_mul(b, n - 2 * s + b - 1);
}

}  // namespace exgraph
