#include "alliance/corpus.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace alliance;

namespace {

auto corpus_path(int n) -> std::filesystem::path
{
  return std::filesystem::path(ALLIANCE_CORPUS_DIR) / ("connected_n" + std::to_string(n) + ".g6");
}

auto shuffled(const Graph & g, std::mt19937 & rng) -> Graph
{
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    edges.push_back({perm[u], perm[v]});
  return Graph(g.order(), edges);
}

} // namespace

TEST_CASE("graph counts by order")
{
  const int all[] = {1, 2, 4, 11, 34, 156, 1044};
  const int connected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    CHECK(enumerate_graphs(n, false).size() == static_cast<std::size_t>(all[n - 1]));
    CHECK(enumerate_graphs(n, true).size() == static_cast<std::size_t>(connected[n - 1]));
  }
  CHECK(connected_corpus(7).size() == 996);
}

TEST_CASE("bundled corpus matches the enumerator")
{
  for (int n = 1; n <= 7; ++n) {
    auto bundled = load_graph6_file(corpus_path(n));
    std::set<std::uint64_t> codes;
    for (const auto & g : bundled) {
      CHECK(g.order() == n);
      CHECK(is_connected(g));
      codes.insert(canonical_code(g));
    }
    CHECK(codes.size() == bundled.size());

    std::set<std::uint64_t> generated;
    for (const auto & g : enumerate_graphs(n, true))
      generated.insert(canonical_code(g));
    CHECK(codes == generated);
  }
  CHECK_THROWS_AS(load_graph6_file("/nonexistent/corpus.g6"), std::runtime_error);
}

TEST_CASE("canonical codes are labelling invariant")
{
  std::mt19937 rng(7);
  for (const auto & g : enumerate_graphs(6, false)) {
    auto code = canonical_code(g);
    for (int trial = 0; trial < 3; ++trial)
      REQUIRE(canonical_code(shuffled(g, rng)) == code);
    REQUIRE(canonical_code(canonical_form(g)) == code);
  }
  CHECK(canonical_code(cycle_graph(6)) != canonical_code(parse_edge_list("0 1\n1 2\n2 0\n3 4\n4 5\n5 3")));
  CHECK_THROWS_AS(canonical_code(cycle_graph(9)), std::length_error);
}

TEST_CASE("enumeration is sorted and deterministic")
{
  auto first = enumerate_graphs(5, true);
  auto second = enumerate_graphs(5, true);
  CHECK(first == second);
  CHECK(std::ranges::is_sorted(first, {}, [](const Graph & g) { return encode_graph6(g); }));
}
