#pragma once

#include <stdexcept>
#include <string>

#include "exgraph/graph.hpp"

namespace exgraph {

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph k4_minus_edge() {
  Graph g = complete_graph(4);
  g.remove_edge(2, 3);
  return g;
}

inline Graph petersen_graph() {
  Graph g(10);
  for (int v = 0; v < 5; ++v) {
    g.add_edge(v, (v + 1) % 5);     // outer C_5
    g.add_edge(v, v + 5);           // spokes
    g.add_edge(v + 5, (v + 2) % 5 + 5);  // inner pentagram
  }
  return g;
}

/// Named fixture graphs addressable from the CLI.
inline Graph fixture_by_name(const std::string& name) {
  if (name == "K3") return complete_graph(3);
  if (name == "K4") return complete_graph(4);
  if (name == "K5") return complete_graph(5);
  if (name == "K4e") return k4_minus_edge();
  if (name == "C5") return cycle_graph(5);
  if (name == "C6") return cycle_graph(6);
  if (name == "C7") return cycle_graph(7);
  if (name == "PETERSEN") return petersen_graph();
  throw std::invalid_argument("unknown fixture graph: " + name);
}

}  // namespace exgraph
