#include "alliance/line_graph.hpp"

namespace alliance {

namespace {

auto build_line_graph(const Graph & base, const std::vector<Edge> & edges) -> Graph
{
  // Edges sharing an endpoint v form a clique; collect per vertex of Γ.
  std::vector<std::vector<Vertex>> incident(static_cast<std::size_t>(base.order()));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].u].push_back(static_cast<Vertex>(i));
    incident[edges[i].v].push_back(static_cast<Vertex>(i));
  }
  std::vector<Edge> line_edges;
  for (const auto & group : incident)
    for (std::size_t a = 0; a < group.size(); ++a)
      for (std::size_t b = a + 1; b < group.size(); ++b)
        line_edges.push_back({group[a], group[b]});
  return Graph(static_cast<int>(edges.size()), line_edges);
}

} // namespace

LineGraph::LineGraph(Graph base) : base_(std::move(base)), edges_(base_.edges())
{
  if (edges_.empty())
    throw std::invalid_argument("line graph of edgeless graph is empty");
  graph_ = build_line_graph(base_, edges_);
  for (std::size_t i = 0; i < edges_.size(); ++i)
    index_.emplace(edges_[i], static_cast<Vertex>(i));
}

auto LineGraph::vertex_of(Vertex u, Vertex v) const -> Vertex
{
  auto it = index_.find({std::min(u, v), std::max(u, v)});
  if (it == index_.end())
    throw std::invalid_argument("{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
  return it->second;
}

auto LineGraph::characteristic_set(const VertexSet & s_l) const -> VertexSet
{
  if (s_l.universe() != edges_.size())
    throw std::out_of_range("line-vertex set universe does not match line graph order");
  if (s_l.empty())
    throw std::invalid_argument("characteristic set of an empty line-vertex set");
  auto out = base_.empty_set();
  for (auto e : s_l) {
    out.insert(edges_[e].u);
    out.insert(edges_[e].v);
  }
  return out;
}

auto LineGraph::edges_at(Vertex v) const -> VertexSet
{
  auto out = graph_.empty_set();
  for (auto w : base_.neighbours(v))
    out.insert(vertex_of(v, w));
  return out;
}

auto LineGraph::edge_list(const VertexSet & s_l) const -> std::vector<Edge>
{
  std::vector<Edge> out;
  for (auto e : s_l)
    out.push_back(edges_.at(e));
  return out;
}

auto line_graph(const Graph & g) -> LineGraph { return LineGraph(g); }

auto edge_vertex_degree(const Graph & g, Vertex u, Vertex v) -> int
{
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
    throw std::invalid_argument("{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
  return g.degree(u) + g.degree(v) - 2;
}

} // namespace alliance
