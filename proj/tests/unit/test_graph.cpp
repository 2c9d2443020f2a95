#include "alliance/graph.hpp"

#include <doctest.h>

using namespace alliance;

namespace {

auto set_of(int n, std::initializer_list<Vertex> vs) -> VertexSet
{
  VertexSet s(static_cast<std::size_t>(n));
  for (auto v : vs)
    s.insert(v);
  return s;
}

} // namespace

TEST_CASE("vertex set basics")
{
  VertexSet s(130);
  CHECK(s.empty());
  s.insert(0);
  s.insert(64);
  s.insert(129);
  CHECK(s.size() == 3);
  CHECK(s.first() == 0);
  CHECK(s.to_vector() == std::vector<Vertex>{0, 64, 129});
  CHECK(s.complement().size() == 127);
  CHECK_THROWS_AS(s.insert(130), std::out_of_range);
  CHECK_THROWS_AS((void)(s & VertexSet(10)), std::invalid_argument);

  auto a = set_of(5, {0, 3});
  auto b = set_of(5, {1, 2});
  CHECK(lex_less(a, b));
  CHECK_FALSE(lex_less(b, a));
  CHECK(lex_less(set_of(5, {0, 1}), set_of(5, {0, 2})));
}

TEST_CASE("graph6 decoding")
{
  auto k4 = parse_graph6("C~");
  CHECK(k4.order() == 4);
  CHECK(k4.size() == 6);

  auto empty = parse_graph6("A?");
  CHECK(empty.order() == 2);
  CHECK(empty.size() == 0);

  auto c4 = parse_graph6("Cl");
  CHECK(c4.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

  CHECK(parse_graph6(">>graph6<<C~") == k4);
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);
  CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
}

TEST_CASE("graph6 round trip across orders")
{
  for (int n : {3, 5, 62, 63, 64, 126})
    CHECK(parse_graph6(encode_graph6(cycle_graph(n))) == cycle_graph(n));
  CHECK(parse_graph6(encode_graph6(Graph(1, {}))).order() == 1);
  auto o5 = odd_graph(5);
  auto text = encode_graph6(o5);
  CHECK(text[0] == '~');
  CHECK(parse_graph6(text) == o5);
  CHECK(encode_graph6(parse_graph6("Cl")) == "Cl");
  CHECK(parse_graph6_corpus("C~\n\nCl\n").size() == 2);
}

TEST_CASE("edge list parsing")
{
  auto p3 = parse_edge_list("0 1\n1 2");
  CHECK(p3.order() == 3);
  CHECK(p3.size() == 2);

  auto iso = parse_edge_list("n 3\n0 1");
  CHECK(iso.order() == 3);
  CHECK(iso.size() == 1);
  CHECK(iso.degree(2) == 0);

  try {
    parse_edge_list("0 1\n0 1");
    FAIL("duplicate accepted");
  }
  catch (const ParseError & e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_edge_list("0 0"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 2\n0 5"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 x"), ParseError);
  CHECK(parse_edge_list("# comment\n1 0\n") == parse_edge_list("0 1"));
  CHECK(parse_edge_list(encode_edge_list(iso)) == iso);
}

TEST_CASE("graph construction rejects bad edges")
{
  std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph(3, loop), std::invalid_argument);
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph(3, dup), std::invalid_argument);
  std::vector<Edge> out{{0, 3}};
  CHECK_THROWS_AS(Graph(3, out), std::invalid_argument);
}

TEST_CASE("generators")
{
  auto c5 = cycle_graph(5);
  CHECK(c5.order() == 5);
  CHECK(c5.size() == 5);
  CHECK(c5.min_degree() == 2);
  CHECK(c5.max_degree() == 2);

  auto o5 = odd_graph(5);
  CHECK(o5.order() == 126);
  CHECK(o5.size() == 315);
  CHECK(o5.min_degree() == 5);
  CHECK(o5.max_degree() == 5);

  CHECK(degree_sequence(star_graph(3)) == std::vector<int>{3, 1, 1, 1});
  CHECK(degree_sequence(cycle_graph(6)) == std::vector<int>{2, 2, 2, 2, 2, 2});
  CHECK(degree_sequence(complete_bipartite_graph(2, 3)) == std::vector<int>{3, 3, 2, 2, 2});

  CHECK(petersen_graph() == kneser_graph(5, 2));
  CHECK(hypercube_graph(3).size() == 12);
  CHECK(complete_graph(5).size() == 10);
  CHECK(path_graph(4).size() == 3);
  CHECK(generate({Family::complete_bipartite, 2, 3}) == complete_bipartite_graph(2, 3));
  CHECK(parse_family("odd-graph") == Family::odd_graph);
  CHECK(family_name(Family::complete_bipartite) == "complete-bipartite");
  CHECK_THROWS_AS(parse_family("wheel"), std::invalid_argument);
}

TEST_CASE("metrics")
{
  auto c8 = metrics(cycle_graph(8));
  CHECK(c8.diameter == 4);
  CHECK(c8.girth == 8);

  auto pet = metrics(petersen_graph());
  CHECK(pet.diameter == 2);
  CHECK(pet.girth == 5);

  auto p4 = metrics(path_graph(4));
  CHECK(p4.diameter == 3);
  CHECK_FALSE(p4.girth.has_value());

  CHECK(girth(odd_graph(5)) == 6);
  CHECK(girth(hypercube_graph(3)) == 4);

  auto split = parse_edge_list("n 4\n0 1\n2 3");
  auto m = metrics(split);
  CHECK_FALSE(m.connected);
  CHECK(m.components.size() == 2);
  CHECK_FALSE(m.diameter.has_value());
  CHECK_FALSE(is_connected_subset(cycle_graph(5), set_of(5, {0, 2})));
  CHECK(is_connected_subset(cycle_graph(5), set_of(5, {4, 0, 1})));
}

TEST_CASE("induced subgraphs")
{
  auto k3 = induced_subgraph(complete_graph(4), set_of(4, {0, 1, 2}));
  CHECK(k3 == complete_graph(3));

  auto pair = induced_subgraph(cycle_graph(5), set_of(5, {0, 2}));
  CHECK(pair.order() == 2);
  CHECK(pair.size() == 0);

  CHECK_THROWS_AS(induced_subgraph(cycle_graph(5), VertexSet(5)), std::invalid_argument);
}
