#include "alliance/line_graph.hpp"

#include <doctest.h>

using namespace alliance;

TEST_CASE("line graphs of small graphs")
{
  auto p3 = line_graph(path_graph(3));
  CHECK(p3.graph() == complete_graph(2));

  auto claw = line_graph(star_graph(3));
  CHECK(claw.graph() == complete_graph(3));

  auto octahedron = line_graph(complete_graph(4)).graph();
  CHECK(octahedron.order() == 6);
  CHECK(octahedron.size() == 12);
  CHECK(octahedron.min_degree() == 4);
  CHECK(octahedron.max_degree() == 4);

  CHECK(line_graph(cycle_graph(6)).graph().order() == 6);
  CHECK(line_graph(petersen_graph()).graph().size() == 30);
  CHECK_THROWS_AS(line_graph(Graph(3, {})), std::invalid_argument);
}

TEST_CASE("line vertices follow edge order")
{
  auto g = cycle_graph(5);
  auto lg = line_graph(g);
  auto edges = g.edges();
  for (int i = 0; i < lg.graph().order(); ++i) {
    CHECK(lg.edge_of(i) == edges[i]);
    CHECK(lg.vertex_of(edges[i].v, edges[i].u) == i);
  }
  CHECK_THROWS_AS((void)lg.vertex_of(0, 2), std::invalid_argument);
}

TEST_CASE("edge degrees")
{
  auto k23 = complete_bipartite_graph(2, 3);
  for (auto [u, v] : k23.edges())
    CHECK(edge_vertex_degree(k23, u, v) == 3);
  CHECK(edge_vertex_degree(complete_graph(2), 0, 1) == 0);
  CHECK(edge_vertex_degree(cycle_graph(5), 0, 1) == 2);
  CHECK_THROWS_AS(edge_vertex_degree(cycle_graph(5), 0, 2), std::invalid_argument);
}

TEST_CASE("characteristic sets")
{
  auto claw = line_graph(star_graph(3));
  VertexSet two(3);
  two.insert(claw.vertex_of(0, 1));
  two.insert(claw.vertex_of(0, 2));
  CHECK(claw.characteristic_set(two).to_vector() == std::vector<Vertex>{0, 1, 2});

  auto p3 = line_graph(path_graph(3));
  CHECK(p3.characteristic_set(p3.graph().vertices()).size() == 3);

  auto c5 = line_graph(cycle_graph(5));
  VertexSet one(5);
  one.insert(c5.vertex_of(2, 3));
  CHECK(c5.characteristic_set(one).to_vector() == std::vector<Vertex>{2, 3});

  CHECK_THROWS_AS(c5.characteristic_set(VertexSet(5)), std::invalid_argument);

  auto star = c5.edges_at(0);
  CHECK(star.size() == 2);
  CHECK(c5.edge_list(star) == std::vector<Edge>{{0, 1}, {0, 4}});
}
