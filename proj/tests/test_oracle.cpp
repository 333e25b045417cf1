#include "doctest.h"

#include "exgraph/fixtures.hpp"
#include "exgraph/formulas.hpp"
#include "exgraph/graph.hpp"
#include "exgraph/hfree.hpp"
#include "exgraph/invariants.hpp"
#include "exgraph/oracle.hpp"

using namespace exgraph;

TEST_CASE("small oracle cells") {
  OracleTable t4 = enumerate_oracle(4);
  CHECK(t4.max_edges[2][1] == 3);  // star K_{1,3}
  Graph star = graph_from_edge_mask(4, t4.witness[2][1]);
  CHECK(star.m == 3);
  CHECK(matching_number(star).first == 1);
  CHECK(clique_number(star).first == 2);

  OracleTable t5 = enumerate_oracle(5);
  CHECK(t5.max_edges[2][2] == 6);  // K_{2,3}
  CHECK(t5.max_edges[5][2] == 10);  // complete graph cell

  OracleTable t7 = enumerate_oracle(7);
  CHECK(t7.max_edges[2][2] == 10);  // K_{2,5}
  CHECK(t7.max_edges[3][3] == 16);  // Turan branch t(7,3)

  CHECK_THROWS_AS(enumerate_oracle(9), capacity_error);
  CHECK_THROWS_AS(enumerate_oracle(0), capacity_error);
}

TEST_CASE("cells are monotone and capped by the complete graph") {
  OracleTable t = enumerate_oracle(6);
  for (int k = 1; k <= 6; ++k)
    for (int s = 0; s <= 3; ++s) {
      if (k > 1) CHECK(t.max_edges[k][s] >= t.max_edges[k - 1][s]);
      if (s > 0) CHECK(t.max_edges[k][s] >= t.max_edges[k][s - 1]);
    }
  CHECK(t.max_edges[6][3] == 15);
}

TEST_CASE("oracle is deterministic across thread counts") {
  for (int n : {3, 5, 6}) {
    OracleTable t1 = enumerate_oracle(n, 1);
    for (int threads : {2, 8}) {
      OracleTable tt = enumerate_oracle(n, threads);
      CHECK(tt.max_edges == t1.max_edges);
      CHECK(tt.witness == t1.witness);
    }
  }
}

TEST_CASE("popcount prune never changes the table") {
  for (int n = 1; n <= 6; ++n) {
    OracleTable pruned = enumerate_oracle(n, 1, true);
    OracleTable full = enumerate_oracle(n, 1, false);
    CHECK(pruned.max_edges == full.max_edges);
    CHECK(pruned.witness == full.witness);
    OracleTable threaded = enumerate_oracle(n, 4, false);
    CHECK(threaded.max_edges == full.max_edges);
    CHECK(threaded.witness == full.witness);
  }
}

TEST_CASE("every cell is at least its construction lower bound") {
  for (int n = 1; n <= 6; ++n) {
    OracleTable t = enumerate_oracle(n);
    for (int k = 1; k <= n; ++k) {
      for (int s = 0; s <= n / 2; ++s) {
        long long padded = make_turan(std::min(n, 2 * s + 1), k).first.m;
        long long gks = k == 1 ? 0 : make_gks(n, k, s).first.m;
        CHECK(t.max_edges[k][s] >= std::max(padded, gks));
      }
    }
  }
}

TEST_CASE("witness graphs satisfy their cell constraints") {
  OracleTable t = enumerate_oracle(6);
  for (int k = 1; k <= 6; ++k) {
    for (int s = 0; s <= 3; ++s) {
      Graph w = graph_from_edge_mask(6, t.witness[k][s]);
      CHECK(w.m == t.max_edges[k][s]);
      CHECK(clique_number(w).first <= k);
      CHECK(matching_number(w).first <= s);
    }
  }
}

TEST_CASE("verify_theorem passes at small n") {
  TheoremReport r5 = verify_theorem(5);
  CHECK(r5.pass);
  TheoremReport r7 = verify_theorem(7, 4);
  CHECK(r7.pass);
  bool found = false;
  for (const auto& c : r7.cells) {
    if (c.n == 7 && c.k == 3 && c.s == 3) {
      found = true;
      CHECK(c.oracle_value == 16);
      CHECK(c.formula.turan_branch == 16);
    }
  }
  CHECK(found);
}

TEST_CASE("negative control: a broken formula is caught") {
  // g without the s(n-s) term misses the extremal K_{2,4} at (6,2,2)
  OracleTable t = enumerate_oracle(6);
  long long broken_gks = turan_edges(2, 1);  // drops s(n-s)
  long long broken = std::max(turan_edges(5, 2), broken_gks);
  CHECK(t.max_edges[2][2] == 8);
  CHECK(broken != t.max_edges[2][2]);
}

TEST_CASE("csv export shape") {
  TheoremReport r = verify_theorem(3);
  std::string csv = theorem_csv(r);
  CHECK(csv.rfind("n,k,s,max_edges,formula,turan_branch,gks_branch,status\n", 0) == 0);
  CHECK(csv.find("FAIL") == std::string::npos);
  std::size_t rows = std::count(csv.begin(), csv.end(), '\n');
  CHECK(rows == r.cells.size() + 1);
}

TEST_CASE("hfree_oracle basics") {
  CHECK(hfree_oracle(7, complete_graph(3), 2) == 10);
  for (int n = 2; n <= 5; ++n)
    CHECK(hfree_oracle(n, complete_graph(2), n / 2) == 0);  // K_2-free: no edges
  // golden values frozen from the enumeration
  CHECK(hfree_oracle(6, cycle_graph(5), 3) == 9);   // K_{3,3}
  CHECK(hfree_oracle(7, cycle_graph(5), 3) == 12);
}

TEST_CASE("hfree_oracle with H = K_{k+1} matches the theorem table") {
  for (int n = 2; n <= 6; ++n) {
    OracleTable t = enumerate_oracle(n);
    for (int k = 1; k <= std::min(n, 5); ++k)
      for (int s = 0; s <= n / 2; ++s)
        CHECK(hfree_oracle(n, complete_graph(k + 1), s) == t.max_edges[k][s]);
  }
}
