#include "doctest.h"

#include "exgraph/fixtures.hpp"
#include "exgraph/formulas.hpp"
#include "exgraph/graph.hpp"
#include "exgraph/hfree.hpp"
#include "exgraph/invariants.hpp"

using namespace exgraph;

TEST_CASE("chromatic_number examples") {
  CHECK(chromatic_number(Graph(0)) == 0);
  CHECK(chromatic_number(Graph(4)) == 1);
  CHECK(chromatic_number(cycle_graph(5)) == 3);
  CHECK(chromatic_number(complete_graph(4)) == 4);
  CHECK(chromatic_number(petersen_graph()) == 3);
  CHECK(chromatic_number(make_turan(12, 4).first) == 4);
  CHECK_THROWS_AS(chromatic_number(Graph(17)), capacity_error);
}

TEST_CASE("chi of Turan graphs and chi >= omega") {
  for (int n = 1; n <= 14; ++n)
    for (int k = 1; k <= n + 1; ++k)
      CHECK(chromatic_number(make_turan(n, k).first) == std::min(n, k));
  for (int rep = 0; rep < 200; ++rep) {
    Graph g = random_graph(4 + rep % 9, 0.2 + 0.07 * (rep % 9), 5100 + rep);
    CHECK(chromatic_number(g) >= clique_number(g).first);
  }
}

TEST_CASE("is_color_critical") {
  for (int n = 2; n <= 7; ++n) {
    auto [crit, edge] = is_color_critical(complete_graph(n));
    CHECK(crit);
    CHECK(edge == std::make_pair(0, 1));  // deterministic witness
  }
  CHECK(is_color_critical(cycle_graph(7)).first);
  CHECK_FALSE(is_color_critical(cycle_graph(6)).first);
  CHECK(is_color_critical(k4_minus_edge()).first);
  CHECK_THROWS_AS(is_color_critical(Graph(3)), std::invalid_argument);

  // the returned edge really lowers chi
  auto [crit, edge] = is_color_critical(cycle_graph(7));
  Graph reduced = cycle_graph(7);
  reduced.remove_edge(edge->first, edge->second);
  CHECK(chromatic_number(reduced) == 2);
}

TEST_CASE("contains_subgraph examples") {
  CHECK(contains_subgraph(complete_graph(6), cycle_graph(5)));
  CHECK_FALSE(contains_subgraph(make_turan(6, 2).first, cycle_graph(5)));
  CHECK_FALSE(contains_subgraph(make_gks(10, 2, 3).first, complete_graph(3)));
  CHECK(contains_subgraph(petersen_graph(), cycle_graph(5)));
  CHECK_FALSE(contains_subgraph(petersen_graph(), cycle_graph(3)));
  CHECK(contains_subgraph(path_graph(6), path_graph(4)));
  CHECK(contains_subgraph(cycle_graph(5), Graph(0)));
  CHECK_FALSE(contains_subgraph(path_graph(3), path_graph(4)));
  CHECK_THROWS_AS(contains_subgraph(Graph(70), complete_graph(3)), capacity_error);
  CHECK_THROWS_AS(contains_subgraph(Graph(10), Graph(9)), capacity_error);
}

TEST_CASE("non-induced convention: a supergraph of H still contains H") {
  // C_4 plus a chord contains P_4 even though no induced P_4 exists in K_3
  Graph g = complete_graph(4);
  CHECK(contains_subgraph(g, cycle_graph(4)));
  CHECK(contains_subgraph(g, path_graph(4)));
}

TEST_CASE("make_pattern derives chi and the clique-analog bound") {
  ForbiddenPattern p = make_pattern(cycle_graph(5));
  CHECK(p.chi == 3);
  CHECK(p.critical);
  CHECK(p.k == 2);
  ForbiddenPattern q = make_pattern(complete_graph(4));
  CHECK(q.k == 3);
}

TEST_CASE("gks constructions are H-free for every color-critical fixture") {
  const std::vector<std::string> fixtures = {"K3", "K4", "C5", "C7", "K4e"};
  for (const auto& name : fixtures) {
    Graph h = fixture_by_name(name);
    int k = chromatic_number(h) - 1;
    CHECK(is_color_critical(h).first);
    for (int n = 2; n <= 40; n += 5) {
      for (int s : {0, 1, n / 4, n / 2}) {
        if (s > n) continue;
        CHECK_FALSE(contains_subgraph(make_gks(n, k, s).first, h));
      }
    }
  }
}

TEST_CASE("hfree oracle floor: never below the gks construction") {
  const std::vector<std::string> fixtures = {"K3", "K4", "C5", "C7", "K4e"};
  for (const auto& name : fixtures) {
    Graph h = fixture_by_name(name);
    int k = chromatic_number(h) - 1;
    for (int n = 2; n <= 6; ++n)
      for (int s = 0; s <= n / 2; ++s)
        CHECK(hfree_oracle(n, h, s) >= g_edges(n, k, s));
  }
}

TEST_CASE("verify_proposition") {
  PropositionReport k3 = verify_proposition(complete_graph(3), 7, 2);
  CHECK(k3.status == PropStatus::EQUAL);
  CHECK(k3.oracle_value == 10);
  CHECK(k3.g_value == 10);

  PropositionReport c5 = verify_proposition(cycle_graph(5), 7, 3);
  CHECK(c5.oracle_value == 12);  // golden from the enumeration
  CHECK(c5.g_value == g_edges(7, 2, 3));
  CHECK(c5.status == PropStatus::EQUAL);
  CHECK(c5.oracle_value >= 12);

  PropositionReport c5small = verify_proposition(cycle_graph(5), 6, 3);
  CHECK(c5small.oracle_value == 9);
  CHECK(c5small.status != PropStatus::ORACLE_SMALLER);

  CHECK_THROWS_AS(verify_proposition(cycle_graph(6), 6, 2), std::invalid_argument);
  CHECK_THROWS_AS(verify_proposition(make_turan(4, 2).first, 6, 2),
                  std::invalid_argument);  // chi = 2 is excluded
}

TEST_CASE("fixture_by_name") {
  CHECK(fixture_by_name("PETERSEN").n == 10);
  CHECK(fixture_by_name("K4e").m == 5);
  CHECK(fixture_by_name("C6").m == 6);
  CHECK_THROWS_AS(fixture_by_name("Q3"), std::invalid_argument);
}
