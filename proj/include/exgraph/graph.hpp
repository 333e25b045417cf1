#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace exgraph {

/// Thrown when an input exceeds an operation's hard size cap.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown on malformed edge-list input; carries the 1-based line number.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Fixed-capacity set of vertices backed by 64-bit words.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int capacity() const { return n_; }

  bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1u; }
  void set(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  int count() const {
    int c = 0;
    for (std::uint64_t x : w_) c += std::popcount(x);
    return c;
  }

  bool any() const {
    for (std::uint64_t x : w_)
      if (x) return true;
    return false;
  }

  bool none() const { return !any(); }

  /// First member >= from, or -1.
  int next(int from) const {
    if (from >= n_) return -1;
    int wi = from >> 6;
    std::uint64_t x = w_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (x) return (wi << 6) + std::countr_zero(x);
      if (++wi >= static_cast<int>(w_.size())) return -1;
      x = w_[wi];
    }
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// True iff every member of this set is also in o.
  bool subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = next(0); v >= 0; v = next(v + 1)) out.push_back(v);
    return out;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

inline constexpr int kMaxVertices = 4096;

/// Undirected simple graph on labeled vertices 0..n-1 with bitset adjacency.
struct Graph {
  int n = 0;
  std::vector<VertexSet> adj;
  long long m = 0;

  Graph() = default;
  explicit Graph(int vertices) : n(vertices), adj(vertices, VertexSet(vertices)) {
    if (vertices < 0 || vertices > kMaxVertices)
      throw std::invalid_argument("vertex count out of range");
  }

  bool has_edge(int u, int v) const { return adj[u].test(v); }

  void add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("vertex out of range");
    if (adj[u].test(v)) return;
    adj[u].set(v);
    adj[v].set(u);
    ++m;
  }

  void remove_edge(int u, int v) {
    if (!adj[u].test(v)) return;
    adj[u].reset(v);
    adj[v].reset(u);
    --m;
  }

  int degree(int v) const { return adj[v].count(); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int u = 0; u < n; ++u)
      for (int v = adj[u].next(u + 1); v >= 0; v = adj[u].next(v + 1))
        out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n == b.n && a.adj == b.adj;
  }
};

/// Ordered vertex classes; larger classes first, contiguous labels.
struct Partition {
  std::vector<std::vector<int>> classes;
};

namespace detail {

/// Class sizes of the balanced partition of n into k parts, largest first.
inline std::vector<int> balanced_sizes(int n, int k) {
  std::vector<int> sizes(k);
  int q = n / k, r = n % k;
  for (int i = 0; i < k; ++i) sizes[i] = q + (i < r ? 1 : 0);
  return sizes;
}

/// Complete multipartite graph from contiguous class sizes.
inline std::pair<Graph, Partition> complete_multipartite(
    const std::vector<int>& sizes) {
  int n = 0;
  for (int s : sizes) n += s;
  Graph g(n);
  Partition part;
  int start = 0;
  for (int s : sizes) {
    std::vector<int> cls(s);
    for (int i = 0; i < s; ++i) cls[i] = start + i;
    part.classes.push_back(std::move(cls));
    start += s;
  }
  // each vertex is adjacent to everything outside its own class
  start = 0;
  for (int s : sizes) {
    for (int v = start; v < start + s; ++v) {
      for (int u = 0; u < n; ++u)
        if (u < start || u >= start + s) g.adj[v].set(u);
    }
    start += s;
  }
  long long sum = 0;
  for (int v = 0; v < n; ++v) sum += g.adj[v].count();
  g.m = sum / 2;
  return {std::move(g), std::move(part)};
}

}  // namespace detail

/// Turan graph T(n,k): complete k-partite, class sizes as equal as possible.
inline std::pair<Graph, Partition> make_turan(int n, int k) {
  if (n < 0) throw std::invalid_argument("make_turan: n must be nonnegative");
  if (k < 1) throw std::invalid_argument("make_turan: k must be positive");
  return detail::complete_multipartite(detail::balanced_sizes(n, k));
}

/// G(n,k,s): k-1 balanced classes covering s vertices plus one class of n-s.
inline std::pair<Graph, Partition> make_gks(int n, int k, int s) {
  if (k < 1) throw std::invalid_argument("make_gks: k must be positive");
  if (s < 0 || s > n) throw std::invalid_argument("make_gks: need 0 <= s <= n");
  if (k == 1 && s > 0)
    throw std::invalid_argument("make_gks: G(n,1,s) undefined for s > 0");
  std::vector<int> sizes =
      k > 1 ? detail::balanced_sizes(s, k - 1) : std::vector<int>{};
  sizes.push_back(n - s);
  return detail::complete_multipartite(sizes);
}

/// Induced subgraph on S; second element maps new labels to old ones.
inline std::pair<Graph, std::vector<int>> induced_subgraph(
    const Graph& g, const std::vector<int>& vertices) {
  for (int v : vertices)
    if (v < 0 || v >= g.n)
      throw std::invalid_argument("induced_subgraph: vertex out of range");
  Graph sub(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.has_edge(vertices[i], vertices[j]))
        sub.add_edge(static_cast<int>(i), static_cast<int>(j));
  return {std::move(sub), vertices};
}

/// Canonical edge-list text: "n m" header then m lines "u v", u < v,
/// ascending lexicographic, each newline-terminated.
inline std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.m << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  auto next_line = [&]() -> bool {
    ++lineno;
    return static_cast<bool>(std::getline(in, line));
  };

  if (!next_line()) throw parse_error("missing header", 1);
  long long n, m;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra))
      throw parse_error("malformed header, expected \"n m\"", lineno);
  }
  if (n < 0 || n > kMaxVertices) throw parse_error("vertex count out of range", lineno);
  if (m < 0 || m > n * (n - 1) / 2) throw parse_error("edge count out of range", lineno);

  Graph g(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    if (!next_line()) throw parse_error("unexpected end of input", lineno + 1);
    long long u, v;
    std::istringstream es(line);
    std::string extra;
    if (!(es >> u >> v) || (es >> extra))
      throw parse_error("malformed edge, expected \"u v\"", lineno);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw parse_error("vertex index out of range", lineno);
    if (u == v) throw parse_error("loop edge", lineno);
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
      throw parse_error("duplicate edge", lineno);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_line() && !line.empty())
    throw parse_error("trailing content after edge list", lineno);
  return g;
}

/// Erdos–Renyi G(n,p), deterministic given the seed: pairs (u,v), u < v,
/// visited in lexicographic order; one mt19937_64 draw per pair, mapped
/// to [0,1) by taking the top 53 bits.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("random_graph: p must be in [0,1]");
  Graph g(n);
  std::mt19937_64 rng(seed);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace exgraph
