#include "alliance/bounds.hpp"

#include <doctest.h>

using namespace alliance;

namespace {

auto entry(const BoundReport & r, const std::string & id) -> const BoundEntry &
{
  for (const auto & e : r.entries)
    if (e.id == id)
      return e;
  throw std::out_of_range(id);
}

auto graph_with_size(int m) -> Graph
{
  return path_graph(m + 1);
}

} // namespace

TEST_CASE("integer helpers")
{
  CHECK(ceil_div(16, 5) == 4);
  CHECK(ceil_div(0, 3) == 0);
  CHECK(ceil_sqrt(16) == 4);
  CHECK(ceil_sqrt(17) == 5);
  CHECK(ceil_sqrt(0) == 0);
  CHECK(ceil_sqrt(1) == 1);
  CHECK(ceil_sqrt(1'000'000'000'000LL) == 1'000'000);
  CHECK(ceil_sqrt(1'000'000'000'001LL) == 1'000'001);
}

TEST_CASE("line sandwich")
{
  auto c6 = line_alliance_sandwich(cycle_graph(6));
  CHECK(c6.defensive.lower == 2);
  CHECK(c6.defensive.upper == 2);

  auto k14 = line_alliance_sandwich(star_graph(4));
  CHECK(k14.unique_max_degree);
  CHECK(k14.defensive.lower == 1);
  CHECK(k14.defensive.upper == 3);
  CHECK(k14.strong.upper == 4);

  auto k4 = line_alliance_sandwich(complete_graph(4));
  CHECK(k4.strong.lower == 3);
  CHECK(k4.strong.upper == 3);
  CHECK_FALSE(k4.unique_max_degree);

  CHECK_THROWS_AS(line_alliance_sandwich(Graph(3, {})), std::invalid_argument);
}

TEST_CASE("regular and semiregular closed forms")
{
  CHECK(regular_line_exact(petersen_graph()) == 3);
  CHECK(regular_line_exact(odd_graph(5)) == 5);
  CHECK_FALSE(regular_line_exact(path_graph(4)).has_value());
  CHECK_FALSE(regular_line_exact(Graph(3, {})).has_value());

  auto k23 = semiregular_line_exact(complete_bipartite_graph(2, 3));
  REQUIRE(k23);
  CHECK(k23->defensive == 2);
  CHECK(k23->strong == 3);

  auto k14 = semiregular_line_exact(star_graph(4));
  REQUIRE(k14);
  CHECK(k14->defensive == 2);
  CHECK(k14->strong == 3);

  auto c6 = semiregular_line_exact(cycle_graph(6));
  REQUIRE(c6);
  CHECK(c6->defensive == 2);
  CHECK(c6->strong == 2);

  auto pair = detect_semiregular_bipartite(complete_bipartite_graph(2, 3));
  REQUIRE(pair);
  CHECK(pair->high == 3);
  CHECK(pair->low == 2);
  CHECK_FALSE(detect_semiregular_bipartite(complete_graph(3)).has_value());
  CHECK_FALSE(detect_semiregular_bipartite(path_graph(4)).has_value());
}

TEST_CASE("small alliance classes")
{
  auto p4 = classify_small_alliance(path_graph(4));
  CHECK(p4.alliance_class == 1);
  CHECK(p4.pattern == Pattern::leaf);

  CHECK(classify_small_alliance(cycle_graph(7)).alliance_class == 2);

  auto k5 = classify_small_alliance(complete_graph(5));
  CHECK(k5.alliance_class == 3);
  CHECK(k5.pattern == Pattern::k3);

  CHECK(classify_small_alliance(odd_graph(5)).alliance_class == 4);
  CHECK(classify_small_alliance(complete_graph(7)).alliance_class == 4);
}

TEST_CASE("small line alliance classes")
{
  CHECK(classify_small_line_alliance(path_graph(3)).alliance_class == 1);
  CHECK(classify_small_line_alliance(complete_graph(2)).pattern == Pattern::k2_component);

  auto c6 = classify_small_line_alliance(cycle_graph(6));
  CHECK(c6.alliance_class == 2);
  CHECK(c6.pattern == Pattern::p3);

  auto pet = classify_small_line_alliance(petersen_graph());
  CHECK(pet.alliance_class == 3);
  CHECK(pet.pattern == Pattern::k1_3);
  CHECK(pet.vertices.size() == 4);

  CHECK(classify_small_line_alliance(odd_graph(5)).alliance_class == 4);
  CHECK_THROWS_AS(classify_small_line_alliance(Graph(2, {})), std::invalid_argument);
}

TEST_CASE("global lower bounds")
{
  CHECK(line_global_sqrt_bound(graph_with_size(12)) == 3);
  CHECK(line_global_sqrt_bound(graph_with_size(7)) == 3);
  CHECK_FALSE(line_global_sqrt_bound(graph_with_size(6)).has_value());

  auto c8 = line_global_degree_bounds(cycle_graph(8));
  CHECK(c8.defensive == 4);
  CHECK(c8.strong == 4);
  auto k4 = line_global_degree_bounds(complete_graph(4));
  CHECK(k4.defensive == 2);
  CHECK(k4.strong == 2);
  auto claw = line_global_degree_bounds(star_graph(3));
  CHECK(claw.defensive == 2);
  CHECK(claw.strong == 2);

  auto c5 = global_degree_bounds(cycle_graph(5));
  CHECK(c5.defensive == 2);
  CHECK(c5.strong == 3);
  auto k4g = global_degree_bounds(complete_graph(4));
  CHECK(k4g.defensive == 2);
  CHECK(k4g.strong == 2);
  auto k1 = global_degree_bounds(Graph(1, {}));
  CHECK(k1.defensive == 1);
  CHECK(k1.strong == 1);

  auto cc8 = connected_global_bounds(cycle_graph(8));
  CHECK(cc8.graph == 3);
  CHECK(cc8.line == 3);
  auto ck4 = connected_global_bounds(complete_graph(4));
  CHECK(ck4.graph == 2);
  CHECK(ck4.line == 2);
  auto cpet = connected_global_bounds(petersen_graph());
  CHECK(cpet.graph == 3);
  CHECK(cpet.line == 3);
  CHECK_FALSE(connected_global_bounds(Graph(1, {})).line.has_value());
  CHECK_THROWS_AS(connected_global_bounds(Graph(2, {})), std::invalid_argument);
}

TEST_CASE("comparison verdicts")
{
  CHECK(comparison_verdict(complete_graph(6)) == Verdict::guaranteed);
  CHECK(comparison_verdict(path_graph(4)) == Verdict::inconclusive);
  CHECK(comparison_verdict(cycle_graph(5)) == Verdict::inconclusive);
  CHECK(comparison_verdict(Graph(3, {})) == Verdict::not_applicable);
}

TEST_CASE("characteristic-set theorem instances")
{
  auto claw = check_characteristic_set_theorem(star_graph(3));
  CHECK(claw.line_alliance_number == 2);
  CHECK(claw.minimum_alliances == 3);
  CHECK(claw.hypothesis_met);
  CHECK(claw.holds);
  REQUIRE(claw.characteristic);
  CHECK(claw.characteristic->size() == 3);

  auto c5 = check_characteristic_set_theorem(cycle_graph(5));
  CHECK(c5.line_alliance_number == 2);
  CHECK(c5.hypothesis_met);
  CHECK(c5.holds);

  auto k2 = check_characteristic_set_theorem(complete_graph(2));
  CHECK(k2.line_alliance_number == 1);
  CHECK(k2.hypothesis_met);
  CHECK(k2.holds);

  CHECK_THROWS_AS(check_characteristic_set_theorem(complete_graph(8)), std::length_error);
}

TEST_CASE("bound report")
{
  auto k23 = bound_report(complete_bipartite_graph(2, 3));
  CHECK(entry(k23, "semiregular-line-exact-defensive").exact == 2);
  CHECK(entry(k23, "semiregular-line-exact-strong").exact == 3);
  CHECK_FALSE(entry(k23, "regular-line-exact-defensive").applicable);
  CHECK_FALSE(entry(k23, "regular-line-exact-defensive").reason.empty());
  CHECK_FALSE(entry(k23, "line-global-sqrt").applicable);

  auto k1 = bound_report(Graph(1, {}));
  CHECK_FALSE(entry(k1, "line-sandwich-defensive").applicable);
  CHECK(entry(k1, "global-degree-defensive").lower == 1);
  CHECK_FALSE(k1.small_line_class.has_value());

  for (const auto & e : bound_report(petersen_graph()).entries) {
    CHECK_FALSE(e.statement.empty());
    if (!e.applicable)
      CHECK_FALSE(e.reason.empty());
  }
}
