#include "alliance/solver.hpp"

#include <doctest.h>

using namespace alliance;
using K = AllianceKind;

TEST_CASE("minimum alliances of small graphs")
{
  auto p4 = min_alliance(path_graph(4), K::defensive);
  CHECK(p4.value == 1);
  CHECK(p4.witness.to_vector() == std::vector<Vertex>{0});
  CHECK(p4.certified);
  CHECK(p4.method == SearchMethod::enumeration);

  auto c5 = min_alliance(cycle_graph(5), K::global_defensive);
  CHECK(c5.value == 3);
  CHECK(c5.witness.to_vector() == std::vector<Vertex>{0, 1, 2});
  CHECK(c5.method == SearchMethod::branch_and_bound);

  CHECK(min_alliance(complete_graph(5), K::defensive).value == 3);
  CHECK(min_alliance(petersen_graph(), K::strong).value == 5);
  CHECK(min_alliance(cycle_graph(8), K::global_connected_defensive).value == 6);
  CHECK(min_alliance(Graph(1, {}), K::global_connected_strong).value == 1);
  CHECK_THROWS_AS(min_alliance(Graph(), K::defensive), std::invalid_argument);
}

TEST_CASE("disconnected graphs")
{
  auto two = parse_edge_list("n 10\n0 1\n1 2\n2 3\n3 4\n4 0\n5 6\n6 7\n7 8\n8 9\n9 5");
  auto global = min_alliance(two, K::global_defensive);
  CHECK(global.value == 6);
  CHECK(global.witness.to_vector() == std::vector<Vertex>{0, 1, 2, 5, 6, 7});
  CHECK(min_alliance(two, K::defensive).value == 2);
  CHECK_THROWS_AS(min_alliance(two, K::global_connected_defensive), InfeasibleError);

  auto isolated = parse_edge_list("n 3\n0 1");
  CHECK(min_alliance(isolated, K::defensive).witness.to_vector() == std::vector<Vertex>{0});
  CHECK(min_alliance(isolated, K::global_strong).value == 3);
}

TEST_CASE("connected subset enumeration")
{
  CHECK(enumerate_connected_subsets(cycle_graph(4), 2).size() == 8);
  CHECK(enumerate_connected_subsets(complete_graph(3), 3).size() == 7);
  CHECK(enumerate_connected_subsets(path_graph(3), 2).size() == 5);

  auto sets = enumerate_connected_subsets(petersen_graph(), 4);
  for (std::size_t i = 1; i < sets.size(); ++i)
    CHECK(sets[i - 1].size() <= sets[i].size());
  for (const auto & s : sets)
    CHECK(is_connected_subset(petersen_graph(), s));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      REQUIRE_FALSE(sets[i] == sets[j]);

  int visited = 0;
  for_each_connected_subset(complete_graph(4), 4, [&](const VertexSet &) { return ++visited < 3; });
  CHECK(visited == 3);
}

TEST_CASE("brute-force oracle")
{
  CHECK(brute_force_oracle(cycle_graph(6), K::strong).value == 2);
  CHECK(brute_force_oracle(complete_graph(4), K::strong).value == 3);
  CHECK(brute_force_oracle(complete_graph(2), K::defensive).value == 1);
  CHECK(brute_force_oracle(cycle_graph(5), K::global_defensive).witness.to_vector() ==
        std::vector<Vertex>{0, 1, 2});
  CHECK(brute_force_oracle(cycle_graph(5), K::defensive).method == SearchMethod::oracle);
  CHECK_THROWS_AS(brute_force_oracle(cycle_graph(17), K::defensive), std::length_error);
  CHECK_THROWS_AS(brute_force_oracle(cycle_graph(31), K::defensive, 31), std::length_error);
  CHECK(brute_force_oracle(cycle_graph(17), K::defensive, 17).value == 2);
  CHECK_THROWS_AS(brute_force_oracle(parse_edge_list("n 4\n0 1\n2 3"), K::global_connected_defensive),
                  InfeasibleError);
}

TEST_CASE("line-graph alliance numbers")
{
  for (int k = 3; k <= 8; ++k)
    CHECK(line_alliance_number(cycle_graph(k), K::defensive).result.value == 2);
  CHECK(line_alliance_number(complete_graph(4), K::defensive).result.value == 3);

  auto k23 = complete_bipartite_graph(2, 3);
  CHECK(line_alliance_number(k23, K::defensive).result.value == 2);
  CHECK(line_alliance_number(k23, K::strong).result.value == 3);

  auto claw = line_alliance_number(star_graph(3), K::defensive);
  CHECK(claw.result.value == 2);
  CHECK(claw.witness_edges == std::vector<Edge>{{0, 1}, {0, 2}});
}

TEST_CASE("budgets")
{
  auto o5 = odd_graph(5);
  Budget tiny;
  tiny.max_nodes = 1000;
  auto r = min_alliance(o5, K::strong, tiny);
  CHECK_FALSE(r.certified);
  CHECK(r.value >= 1);
  CHECK(r.value <= 14);

  auto g = min_alliance(petersen_graph(), K::global_strong, tiny);
  if (!g.certified) {
    CHECK(g.value <= 5);
    CHECK(is_alliance(petersen_graph(), g.witness, K::global_strong));
  }

  Budget timed;
  timed.max_time = std::chrono::milliseconds(50);
  auto t = min_alliance(o5, K::strong, timed);
  CHECK_FALSE(t.certified);

  auto ok = min_alliance(cycle_graph(5), K::defensive, tiny);
  CHECK(ok.certified);
}

TEST_CASE("the 5-regular odd graph")
{
  auto o5 = odd_graph(5);
  auto a = min_alliance(o5, K::defensive);
  CHECK(a.value == 6);
  auto cycle = induced_subgraph(o5, a.witness);
  CHECK(cycle.size() == 6);
  CHECK(cycle.min_degree() == 2);
  CHECK(is_connected(cycle));

  auto line = line_alliance_number(o5, K::defensive);
  CHECK(line.result.value == 5);
  CHECK(line.result.certified);
}
