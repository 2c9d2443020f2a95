#pragma once

#include "alliance/errors.hpp"
#include "alliance/vertex_set.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace alliance {

struct Edge
{
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/**
 * Immutable simple undirected graph on the dense ids 0..n-1. Holds both a
 * bitset adjacency matrix (for set arithmetic) and sorted neighbour lists.
 */
class Graph
{
public:
  Graph() = default;

  /// Builds a graph from an edge list. Throws std::invalid_argument on a
  /// self-loop, a duplicate edge or an out-of-range endpoint.
  Graph(int order, std::span<const Edge> edges);

  auto order() const -> int { return static_cast<int>(neighbours_.size()); }
  auto size() const -> int { return size_; }

  auto degree(Vertex v) const -> int { return static_cast<int>(neighbours_.at(v).size()); }
  auto neighbours(Vertex v) const -> std::span<const Vertex> { return neighbours_.at(v); }
  auto adjacency(Vertex v) const -> const VertexSet & { return adjacency_.at(v); }
  auto adjacent(Vertex u, Vertex v) const -> bool { return adjacency_.at(u).contains(v); }

  /// δ1 ≥ δ2 ≥ … ≥ δn.
  auto degree_sequence() const -> std::span<const int> { return degree_sequence_; }
  auto max_degree() const -> int { return degree_sequence_.empty() ? 0 : degree_sequence_.front(); }
  auto min_degree() const -> int { return degree_sequence_.empty() ? 0 : degree_sequence_.back(); }

  /// Edges with u < v, sorted lexicographically.
  auto edges() const -> std::vector<Edge>;

  auto vertices() const -> VertexSet { return VertexSet::full(static_cast<std::size_t>(order())); }
  auto empty_set() const -> VertexSet { return VertexSet(static_cast<std::size_t>(order())); }

  friend auto operator==(const Graph & a, const Graph & b) -> bool
  {
    return a.adjacency_ == b.adjacency_;
  }

private:
  int size_ = 0;
  std::vector<VertexSet> adjacency_;
  std::vector<std::vector<Vertex>> neighbours_;
  std::vector<int> degree_sequence_;
};

auto degree_sequence(const Graph & g) -> std::vector<int>;

// ---- file formats -------------------------------------------------------

/// One graph6 record; a leading ">>graph6<<" header and trailing newline are
/// accepted. Supports the 1-, 4- and 8-byte order encodings.
auto parse_graph6(std::string_view text) -> Graph;
auto encode_graph6(const Graph & g) -> std::string;

/// All records of a multi-line .g6 corpus (blank lines skipped).
auto parse_graph6_corpus(std::string_view text) -> std::vector<Graph>;

/// "u v" per line; optional leading "n <count>"; '#' starts a comment.
auto parse_edge_list(std::string_view text) -> Graph;
auto encode_edge_list(const Graph & g) -> std::string;

// ---- generators ---------------------------------------------------------

enum class Family
{
  path,
  cycle,
  complete,
  complete_bipartite,
  star,
  kneser,
  odd_graph,
  petersen,
  hypercube,
};

struct GraphFamily
{
  Family family;
  int p = 0;
  int q = 0;
};

auto family_name(Family f) -> std::string_view;
auto parse_family(std::string_view name) -> Family;

/**
 * Deterministic labelings:
 *  - path, cycle: vertices in path / cyclic order.
 *  - complete_bipartite(p, q): side A is 0..p-1, side B is p..p+q-1.
 *  - star(p) = K_{1,p}: hub 0, leaves 1..p.
 *  - kneser(p, q): q-subsets of {0..p-1} in lexicographic order, adjacent
 *    when disjoint. odd_graph(k) = kneser(2k-1, k-1); petersen = odd_graph(3).
 *  - hypercube(d): vertex bit strings, adjacent at Hamming distance one.
 */
auto generate(const GraphFamily & family) -> Graph;

auto path_graph(int n) -> Graph;
auto cycle_graph(int n) -> Graph;
auto complete_graph(int n) -> Graph;
auto complete_bipartite_graph(int a, int b) -> Graph;
auto star_graph(int leaves) -> Graph;
auto kneser_graph(int ground, int subset) -> Graph;
auto odd_graph(int k) -> Graph;
auto petersen_graph() -> Graph;
auto hypercube_graph(int dimension) -> Graph;

// ---- structure ----------------------------------------------------------

struct Metrics
{
  bool connected = true;
  std::vector<VertexSet> components;
  /// Empty when the graph is disconnected (infinite diameter).
  std::optional<int> diameter;
  /// Empty when the graph is a forest.
  std::optional<int> girth;
};

auto components(const Graph & g) -> std::vector<VertexSet>;
auto is_connected(const Graph & g) -> bool;

/// Whether ⟨s⟩ is connected; the empty set is not.
auto is_connected_subset(const Graph & g, const VertexSet & s) -> bool;

/// BFS distances from `source`; -1 for unreachable vertices.
auto distances_from(const Graph & g, Vertex source) -> std::vector<int>;

auto diameter(const Graph & g) -> std::optional<int>;
auto girth(const Graph & g) -> std::optional<int>;
auto metrics(const Graph & g) -> Metrics;

/// ⟨s⟩ relabelled so that the i-th smallest member of s becomes vertex i.
auto induced_subgraph(const Graph & g, const VertexSet & s) -> Graph;

} // namespace alliance
