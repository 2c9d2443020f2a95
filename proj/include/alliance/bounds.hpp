#pragma once

#include "alliance/kernel.hpp"
#include "alliance/line_graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace alliance {

// None of these evaluators runs an alliance search beyond what their own
// statement requires; in particular they never call the solver.

/// ⌈a / b⌉ for a ≥ 0, b > 0.
constexpr auto ceil_div(long long a, long long b) -> long long { return (a + b - 1) / b; }

/// Smallest s ≥ 0 with s² ≥ x.
auto ceil_sqrt(long long x) -> long long;

struct Interval
{
  int lower;
  int upper;
};

struct LineSandwich
{
  Interval defensive;
  Interval strong;
  bool unique_max_degree;
};

/**
 * For L(g): ⌈(δn+δn−1−1)/2⌉ ≤ a ≤ δ1 and ⌈(δn+δn−1)/2⌉ ≤ â ≤ δ1, with the
 * defensive upper bound lowered to δ1−1 when one vertex alone has degree δ1.
 * Throws std::invalid_argument for an edgeless graph.
 */
auto line_alliance_sandwich(const Graph & g) -> LineSandwich;

/// a(L) = â(L) = δ for δ-regular g with δ > 0.
auto regular_line_exact(const Graph & g) -> std::optional<int>;

struct DegreePair
{
  int high;
  int low;
};

/// (δ1, δ2) when g is bipartite with every vertex on one side of degree δ1
/// and every vertex on the other of degree δ2 (no isolated vertices).
auto detect_semiregular_bipartite(const Graph & g) -> std::optional<DegreePair>;

struct LineExact
{
  int defensive;
  int strong;
};

/// (⌈(δ1+δ2−1)/2⌉, ⌈(δ1+δ2)/2⌉) for (δ1,δ2)-semiregular bipartite g.
auto semiregular_line_exact(const Graph & g) -> std::optional<LineExact>;

enum class Pattern
{
  leaf,
  edge,
  k2_component,
  p3,
  p4,
  k3,
  k1_3,
};

auto pattern_name(Pattern p) -> std::string_view;

/// Class 1, 2 or 3, or 4 standing for "≥ 4". Vertices list the triggering
/// pattern in its natural order (path order; hub first for K_{1,3}).
struct SmallAllianceClass
{
  int alliance_class = 4;
  std::optional<Pattern> pattern;
  std::vector<Vertex> vertices;
};

/// Class of a(g) from degree patterns of at most three vertices.
auto classify_small_alliance(const Graph & g) -> SmallAllianceClass;

/// Class of a(L(g)) read off g directly: K_2 components and pendant edges,
/// P_3 / P_4 / K_3 / K_{1,3} subgraphs with bounded endpoint degree sums.
/// Throws std::invalid_argument for an edgeless graph.
auto classify_small_line_alliance(const Graph & g) -> SmallAllianceClass;

/// γ_a(L) ≥ ⌈√(m+4) − 1⌉ when m > 6.
auto line_global_sqrt_bound(const Graph & g) -> std::optional<int>;

struct GlobalLowerBounds
{
  int defensive;
  int strong;
};

/// γ_a(g) ≥ ⌈2n/(δ1+3)⌉ and γ_â(g) ≥ ⌈n/(⌊δ1/2⌋+1)⌉.
auto global_degree_bounds(const Graph & g) -> GlobalLowerBounds;

/// γ_a(L) ≥ ⌈2m/(δ1+δ2+1)⌉ and γ_â(L) ≥ ⌈2m/(δ1+δ2)⌉; δ1, δ2 the two
/// largest degrees of g. Throws std::invalid_argument for an edgeless graph.
auto line_global_degree_bounds(const Graph & g) -> GlobalLowerBounds;

struct ConnectedGlobalBounds
{
  int graph;
  /// Absent for an edgeless graph (no line graph).
  std::optional<int> line;
};

/// γ_ca(g) ≥ ⌈√(D+n) − 1⌉ and γ_ca(L) ≥ ⌈√(D+m−1) − 1⌉.
/// Throws std::invalid_argument when g is disconnected.
auto connected_global_bounds(const Graph & g) -> ConnectedGlobalBounds;

enum class Verdict
{
  guaranteed,
  inconclusive,
  not_applicable,
};

auto verdict_name(Verdict v) -> std::string_view;

/// Whether a(g) ≤ a(L(g)) follows from a(g) ≤ ⌈n/2⌉ and the sandwich lower
/// bound on a(L(g)).
auto comparison_verdict(const Graph & g) -> Verdict;

struct CharacteristicSetCheck
{
  int line_alliance_number = 0;
  int minimum_alliances = 0;
  int qualifying_alliances = 0;
  bool hypothesis_met = false;
  /// Set when the hypothesis is met: C contains a defensive alliance of g of
  /// size ≤ a(L(g)).
  bool holds = false;
  std::optional<VertexSet> line_alliance;
  std::optional<VertexSet> characteristic;
  std::optional<VertexSet> contained_alliance;
};

/**
 * Enumerates every minimum defensive alliance S_l of L(g) and tests whether
 * its characteristic set is a defensive alliance of g. When one is, the
 * characteristic set is searched for a defensive alliance of g with at most
 * |S_l| vertices. Throws std::length_error if L(g) has more than
 * `max_line_order` vertices.
 */
auto check_characteristic_set_theorem(const Graph & g, int max_line_order = 21)
    -> CharacteristicSetCheck;

struct BoundTarget
{
  bool line;
  AllianceKind kind;
};

struct BoundEntry
{
  std::string id;
  BoundTarget target;
  bool applicable = false;
  std::string reason;
  std::optional<int> lower;
  std::optional<int> upper;
  std::optional<int> exact;
  std::string statement;
};

struct BoundReport
{
  std::vector<BoundEntry> entries;
  Verdict comparison = Verdict::not_applicable;
  SmallAllianceClass small_class;
  std::optional<SmallAllianceClass> small_line_class;
};

auto bound_report(const Graph & g) -> BoundReport;

} // namespace alliance
