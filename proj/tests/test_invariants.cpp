#include "doctest.h"

#include <set>

#include "exgraph/fixtures.hpp"
#include "exgraph/graph.hpp"
#include "exgraph/invariants.hpp"

using namespace exgraph;

namespace {

void check_matching_valid(const Graph& g, const Matching& m) {
  std::set<int> seen;
  for (auto [u, v] : m.pairs) {
    CHECK(g.has_edge(u, v));
    CHECK(seen.insert(u).second);
    CHECK(seen.insert(v).second);
  }
}

}  // namespace

TEST_CASE("matching_number examples") {
  CHECK(matching_number(cycle_graph(5)).first == 2);
  CHECK(matching_number(make_gks(7, 2, 2).first).first == 2);
  CHECK(matching_number(petersen_graph()).first == 5);
  CHECK(matching_number(Graph(0)).first == 0);
  auto [nu, m] = matching_number(random_graph(30, 0.2, 9));
  check_matching_valid(random_graph(30, 0.2, 9), m);
  CHECK(static_cast<int>(m.pairs.size()) == nu);
}

TEST_CASE("matching oracle basics") {
  CHECK(matching_number_oracle(Graph(5)) == 0);
  CHECK(matching_number_oracle(complete_graph(4)) == 2);
  CHECK(matching_number_oracle(petersen_graph()) == 5);
  CHECK_THROWS_AS(matching_number_oracle(Graph(23)), capacity_error);
}

TEST_CASE("blossom agrees with the subset-DP oracle") {
  int id = 0;
  for (int rep = 0; rep < 200; ++rep) {
    int n = 2 + rep % 13;
    double p = 0.1 + 0.1 * (rep % 9);
    Graph g = random_graph(n, p, 4242 + id++);
    auto [nu, m] = matching_number(g);
    CHECK(nu == matching_number_oracle(g));
    check_matching_valid(g, m);
  }
}

TEST_CASE("clique_number examples") {
  CHECK(clique_number(make_turan(9, 3).first).first == 3);
  CHECK(clique_number(cycle_graph(5)).first == 2);
  CHECK(clique_number(make_gks(10, 4, 2).first).first == 3);  // min(k, s+1)
  auto [omega, witness] = clique_number(petersen_graph());
  CHECK(omega == 2);
  for (std::size_t i = 0; i < witness.size(); ++i)
    for (std::size_t j = i + 1; j < witness.size(); ++j)
      CHECK(petersen_graph().has_edge(witness[i], witness[j]));
  CHECK_THROWS_AS(clique_number(Graph(200)), capacity_error);
}

TEST_CASE("clique witness is lexicographically smallest") {
  // two maximum cliques {0,1,2} and {3,4,5}; expect the first
  Graph g(6);
  for (int u = 0; u < 3; ++u)
    for (int v = u + 1; v < 3; ++v) g.add_edge(u, v);
  for (int u = 3; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) g.add_edge(u, v);
  CHECK(clique_number(g).second == std::vector<int>{0, 1, 2});
}

TEST_CASE("is_k_clique_free") {
  CHECK(is_k_clique_free(make_turan(9, 3).first, 3));
  CHECK_FALSE(is_k_clique_free(complete_graph(5), 4));
  CHECK(is_k_clique_free(make_gks(12, 3, 4).first, 3));
  for (int rep = 0; rep < 50; ++rep) {
    Graph g = random_graph(12, 0.5, 900 + rep);
    int omega = clique_number(g).first;
    CHECK(is_k_clique_free(g, omega));
    CHECK_FALSE(is_k_clique_free(g, omega - 1));
  }
}

TEST_CASE("tutte_berge examples") {
  TutteBergeWitness w = tutte_berge_max_deficiency(make_gks(9, 3, 2).first);
  CHECK(w.B == std::vector<int>{0, 1});
  CHECK(w.odd_components == std::vector<int>(7, 1));
  CHECK(w.bound == 2);

  TutteBergeWitness k4 = tutte_berge_max_deficiency(complete_graph(4));
  CHECK(k4.B.empty());
  CHECK(k4.bound == 2);

  TutteBergeWitness c5 = tutte_berge_max_deficiency(cycle_graph(5));
  CHECK(c5.B.empty());
  CHECK(c5.odd_components == std::vector<int>{5});
  CHECK(c5.bound == 2);

  CHECK_THROWS_AS(tutte_berge_max_deficiency(Graph(17)), capacity_error);
}

TEST_CASE("tutte-berge identity on random graphs") {
  for (int rep = 0; rep < 120; ++rep) {
    int n = 1 + rep % 12;
    Graph g = random_graph(n, 0.1 + 0.08 * (rep % 10), 7100 + rep);
    TutteBergeWitness w = tutte_berge_max_deficiency(g);
    int nu = matching_number(g).first;
    int deficiency = static_cast<int>(w.odd_components.size()) -
                     static_cast<int>(w.B.size());
    CHECK(nu == (n - deficiency) / 2);
    CHECK(w.bound == nu);
  }
}

TEST_CASE("gallai_edmonds examples") {
  GallaiEdmonds ge = gallai_edmonds(make_gks(7, 2, 2).first);
  CHECK(ge.D == std::vector<int>{2, 3, 4, 5, 6});
  CHECK(ge.A == std::vector<int>{0, 1});
  CHECK(ge.C.empty());

  GallaiEdmonds k4 = gallai_edmonds(complete_graph(4));
  CHECK(k4.D.empty());
  CHECK(k4.A.empty());
  CHECK(k4.C == std::vector<int>{0, 1, 2, 3});

  GallaiEdmonds c5 = gallai_edmonds(cycle_graph(5));
  CHECK(c5.D == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("gallai_edmonds consistency with vertex deletion and deficiency") {
  for (int rep = 0; rep < 60; ++rep) {
    int n = 2 + rep % 11;
    Graph g = random_graph(n, 0.15 + 0.1 * (rep % 8), 8300 + rep);
    int nu = matching_number(g).first;
    GallaiEdmonds ge = gallai_edmonds(g);
    std::set<int> inD(ge.D.begin(), ge.D.end());
    for (int v = 0; v < n; ++v) {
      std::vector<int> others;
      for (int u = 0; u < n; ++u)
        if (u != v) others.push_back(u);
      int nu_minus = matching_number(induced_subgraph(g, others).first).first;
      if (inD.count(v))
        CHECK(nu_minus == nu);
      else
        CHECK(nu_minus == nu - 1);
    }
    // B = A attains the maximum deficiency
    TutteBergeWitness best = tutte_berge_max_deficiency(g);
    int best_def = static_cast<int>(best.odd_components.size()) -
                   static_cast<int>(best.B.size());
    std::set<int> inA(ge.A.begin(), ge.A.end());
    int odd = 0;
    {
      std::vector<char> seen(n, false);
      for (int start = 0; start < n; ++start) {
        if (seen[start] || inA.count(start)) continue;
        int size = 0;
        std::vector<int> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
          int v = stack.back();
          stack.pop_back();
          ++size;
          for (int u = g.adj[v].next(0); u >= 0; u = g.adj[v].next(u + 1))
            if (!seen[u] && !inA.count(u)) seen[u] = true, stack.push_back(u);
        }
        if (size % 2 == 1) ++odd;
      }
    }
    CHECK(odd - static_cast<int>(ge.A.size()) == best_def);
  }
}

TEST_CASE("generator invariants under the exact solvers") {
  for (int n = 2; n <= 40; n += 2) {
    CHECK(matching_number(make_gks(n, 3, n / 4).first).first == n / 4);
    if (n <= 30) CHECK(clique_number(make_turan(n, 4).first).first == std::min(n, 4));
  }
}
