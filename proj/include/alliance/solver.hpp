#pragma once

#include "alliance/kernel.hpp"
#include "alliance/line_graph.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>

namespace alliance {

/// Resource limits for one solve. Unset fields mean unlimited.
struct Budget
{
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::chrono::milliseconds> max_time;
};

enum class SearchMethod
{
  enumeration,
  branch_and_bound,
  oracle,
};

auto method_name(SearchMethod m) -> std::string_view;

/**
 * Minimum alliance of one kind. When `certified` is false the budget ran out:
 * `value` is then only a proven lower bound and `witness` is the best alliance
 * seen so far (possibly empty, possibly larger than `value`).
 */
struct SolveResult
{
  AllianceKind kind;
  int value = 0;
  VertexSet witness;
  SearchMethod method = SearchMethod::enumeration;
  std::uint64_t nodes_explored = 0;
  bool certified = true;
};

/**
 * Exact minimum cardinality of an alliance of `kind`, with the
 * lexicographically least witness of that size.
 *
 * Defensive and strong kinds enumerate connected vertex subsets by increasing
 * size (a minimum alliance of these kinds induces a connected subgraph).
 * Global kinds run branch-and-bound per connected component and sum the
 * component optima; connected-global kinds on a disconnected graph throw
 * InfeasibleError.
 */
auto min_alliance(const Graph & g, AllianceKind kind, const Budget & budget = {}) -> SolveResult;

/// Visits every vertex subset of size ≤ max_size inducing a connected
/// subgraph, each once, in non-decreasing size order. Stops early when
/// `visit` returns false.
auto for_each_connected_subset(const Graph & g, int max_size,
                               const std::function<bool(const VertexSet &)> & visit) -> void;

auto enumerate_connected_subsets(const Graph & g, int max_size) -> std::vector<VertexSet>;

inline constexpr int default_oracle_cap = 16;

/// Minimum over all 2^n − 1 nonempty subsets, tested with is_alliance only.
/// Throws std::length_error above `cap` vertices (cap at most 30).
auto brute_force_oracle(const Graph & g, AllianceKind kind, int cap = default_oracle_cap) -> SolveResult;

struct LineSolveResult
{
  SolveResult result;
  std::vector<Edge> witness_edges;
};

/// min_alliance on L(g); the witness is also reported as edges of g.
auto line_alliance_number(const Graph & g, AllianceKind kind, const Budget & budget = {})
    -> LineSolveResult;

} // namespace alliance
