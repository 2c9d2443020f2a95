#pragma once

#include "alliance/graph.hpp"

#include <map>

namespace alliance {

/**
 * L(Γ) together with the mapping between its vertices and the edges of Γ.
 * Line-vertex ids follow the lexicographic order of the (min, max) endpoint
 * pairs, i.e. the order of Graph::edges().
 */
class LineGraph
{
public:
  /// Throws std::invalid_argument for an edgeless base graph.
  explicit LineGraph(Graph base);

  auto base() const -> const Graph & { return base_; }
  auto graph() const -> const Graph & { return graph_; }

  auto edge_of(Vertex line_vertex) const -> Edge { return edges_.at(line_vertex); }
  /// Line vertex of the edge {u, v}; throws std::invalid_argument for a non-edge.
  auto vertex_of(Vertex u, Vertex v) const -> Vertex;

  /// Vertices of Γ covered by the edges in s_l. Throws on an empty s_l.
  auto characteristic_set(const VertexSet & s_l) const -> VertexSet;

  /// Line-vertex set of the edges incident to v in Γ (a clique of L(Γ)).
  auto edges_at(Vertex v) const -> VertexSet;

  auto edge_list(const VertexSet & s_l) const -> std::vector<Edge>;

private:
  Graph base_;
  Graph graph_;
  std::vector<Edge> edges_;
  std::map<Edge, Vertex> index_;
};

auto line_graph(const Graph & g) -> LineGraph;

/// δ(u) + δ(v) − 2 for an edge {u, v} of g.
auto edge_vertex_degree(const Graph & g, Vertex u, Vertex v) -> int;

} // namespace alliance
