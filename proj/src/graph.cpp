#include "alliance/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

namespace alliance {

Graph::Graph(int order, std::span<const Edge> edges)
{
  if (order < 0)
    throw std::invalid_argument("negative graph order");
  adjacency_.assign(static_cast<std::size_t>(order), VertexSet(static_cast<std::size_t>(order)));
  neighbours_.resize(static_cast<std::size_t>(order));

  for (const auto & e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= order || e.v >= order)
      throw std::invalid_argument("edge endpoint outside 0.." + std::to_string(order - 1));
    if (e.u == e.v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (adjacency_[e.u].contains(e.v))
      throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    adjacency_[e.u].insert(e.v);
    adjacency_[e.v].insert(e.u);
    ++size_;
  }

  for (int v = 0; v < order; ++v) {
    neighbours_[v] = adjacency_[v].to_vector();
    degree_sequence_.push_back(static_cast<int>(neighbours_[v].size()));
  }
  std::ranges::sort(degree_sequence_, std::greater<>{});
}

auto Graph::edges() const -> std::vector<Edge>
{
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int u = 0; u < order(); ++u)
    for (auto v : neighbours_[u])
      if (u < v)
        out.push_back({u, v});
  return out;
}

auto degree_sequence(const Graph & g) -> std::vector<int>
{
  auto seq = g.degree_sequence();
  return {seq.begin(), seq.end()};
}

// ---- graph6 -------------------------------------------------------------

namespace {

constexpr std::string_view graph6_header = ">>graph6<<";

auto strip_line_end(std::string_view text) -> std::string_view
{
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  return text;
}

} // namespace

auto parse_graph6(std::string_view text) -> Graph
{
  text = strip_line_end(text);
  std::size_t offset = 0;
  if (text.starts_with(graph6_header))
    offset = graph6_header.size();

  for (std::size_t i = offset; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      std::ostringstream msg;
      msg << "graph6: byte " << i << ": character code " << int(c) << " outside 63..126";
      throw ParseError(msg.str(), i);
    }
  }

  auto value = [&](std::size_t i) { return static_cast<std::uint64_t>(text[i]) - 63; };

  if (offset >= text.size())
    throw ParseError("graph6: byte " + std::to_string(offset) + ": missing order byte", offset);

  std::uint64_t n = 0;
  std::size_t pos = offset;
  if (value(pos) < 63) {
    n = value(pos);
    pos += 1;
  }
  else if (pos + 1 < text.size() && value(pos + 1) == 63) {
    if (pos + 8 > text.size())
      throw ParseError("graph6: byte " + std::to_string(pos) + ": truncated 8-byte order", pos);
    for (std::size_t i = pos + 2; i < pos + 8; ++i)
      n = (n << 6) | value(i);
    pos += 8;
  }
  else {
    if (pos + 4 > text.size())
      throw ParseError("graph6: byte " + std::to_string(pos) + ": truncated 4-byte order", pos);
    for (std::size_t i = pos + 1; i < pos + 4; ++i)
      n = (n << 6) | value(i);
    pos += 4;
  }

  if (n > (1u << 20))
    throw ParseError("graph6: byte " + std::to_string(offset) + ": order " + std::to_string(n) +
                         " too large",
                     offset);

  std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::uint64_t expected_bytes = (bits + 5) / 6;
  if (text.size() - pos != expected_bytes) {
    std::ostringstream msg;
    msg << "graph6: byte " << pos << ": expected " << expected_bytes
        << " adjacency bytes for order " << n << ", found " << (text.size() - pos);
    throw ParseError(msg.str(), pos);
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (int j = 1; j < static_cast<int>(n); ++j)
    for (int i = 0; i < j; ++i, ++k) {
      auto byte = value(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1u)
        edges.push_back({i, j});
    }

  return Graph(static_cast<int>(n), edges);
}

auto encode_graph6(const Graph & g) -> std::string
{
  std::string out;
  auto n = static_cast<std::uint64_t>(g.order());
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  }
  else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }

  int acc = 0;
  int filled = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0)
    out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

auto parse_graph6_corpus(std::string_view text) -> std::vector<Graph>
{
  std::vector<Graph> out;
  std::size_t line_start = 0;
  while (line_start < text.size()) {
    auto line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos)
      line_end = text.size();
    auto line = strip_line_end(text.substr(line_start, line_end - line_start));
    if (!line.empty()) {
      try {
        out.push_back(parse_graph6(line));
      }
      catch (const ParseError & e) {
        throw ParseError("record " + std::to_string(out.size() + 1) + ": " + e.what(),
                         line_start + e.position());
      }
    }
    line_start = line_end + 1;
  }
  return out;
}

// ---- edge list ----------------------------------------------------------

namespace {

auto split_tokens(std::string_view line) -> std::vector<std::string_view>
{
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
      ++i;
    if (i > start)
      tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

auto parse_id(std::string_view token, std::size_t line) -> int
{
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
    throw ParseError("edge list: line " + std::to_string(line) + ": expected a non-negative integer, got '" +
                         std::string(token) + "'",
                     line);
  return value;
}

} // namespace

auto parse_edge_list(std::string_view text) -> Graph
{
  std::optional<int> declared;
  std::vector<Edge> edges;
  std::map<Edge, std::size_t> first_line;
  int max_id = -1;
  bool seen_content = false;

  std::size_t line_no = 0;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    auto line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos)
      line_end = text.size();
    ++line_no;
    auto line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto tokens = split_tokens(line);
    line_start = line_end + 1;

    if (tokens.empty())
      continue;
    if (!seen_content && tokens[0] == "n") {
      seen_content = true;
      if (tokens.size() != 2)
        throw ParseError("edge list: line " + std::to_string(line_no) + ": header must be 'n <count>'", line_no);
      declared = parse_id(tokens[1], line_no);
      continue;
    }
    seen_content = true;
    if (tokens.size() != 2)
      throw ParseError("edge list: line " + std::to_string(line_no) + ": expected two vertex ids", line_no);
    auto u = parse_id(tokens[0], line_no);
    auto v = parse_id(tokens[1], line_no);
    if (u == v)
      throw ParseError("edge list: line " + std::to_string(line_no) + ": self-loop at vertex " +
                           std::to_string(u),
                       line_no);
    if (declared && std::max(u, v) >= *declared)
      throw ParseError("edge list: line " + std::to_string(line_no) + ": vertex id exceeds declared order " +
                           std::to_string(*declared),
                       line_no);
    Edge e{std::min(u, v), std::max(u, v)};
    if (auto [at, fresh] = first_line.emplace(e, line_no); !fresh)
      throw ParseError("edge list: line " + std::to_string(line_no) + ": duplicate edge " +
                           std::to_string(e.u) + " " + std::to_string(e.v) + " (first at line " +
                           std::to_string(at->second) + ")",
                       line_no);
    edges.push_back(e);
    max_id = std::max(max_id, e.v);
  }

  return Graph(declared.value_or(max_id + 1), edges);
}

auto encode_edge_list(const Graph & g) -> std::string
{
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (auto e : g.edges())
    out << e.u << ' ' << e.v << '\n';
  return out.str();
}

// ---- generators ---------------------------------------------------------

namespace {

auto require(bool ok, const std::string & what) -> void
{
  if (!ok)
    throw std::invalid_argument(what);
}

} // namespace

auto path_graph(int n) -> Graph
{
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.push_back({i, i + 1});
  return Graph(n, edges);
}

auto cycle_graph(int n) -> Graph
{
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Graph(n, edges);
}

auto complete_graph(int n) -> Graph
{
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      edges.push_back({i, j});
  return Graph(n, edges);
}

auto complete_bipartite_graph(int a, int b) -> Graph
{
  require(a >= 1 && b >= 1, "complete bipartite graph needs both sides >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      edges.push_back({i, a + j});
  return Graph(a + b, edges);
}

auto star_graph(int leaves) -> Graph
{
  require(leaves >= 1, "star needs at least one leaf");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i)
    edges.push_back({0, i});
  return Graph(leaves + 1, edges);
}

auto kneser_graph(int ground, int subset) -> Graph
{
  require(ground >= 1 && subset >= 1 && subset <= ground && ground <= 30,
          "kneser graph needs 1 <= subset <= ground <= 30");
  std::vector<std::uint32_t> masks;
  std::vector<int> chosen;
  std::function<void(int)> extend = [&](int from) {
    if (static_cast<int>(chosen.size()) == subset) {
      std::uint32_t mask = 0;
      for (auto c : chosen)
        mask |= 1u << c;
      masks.push_back(mask);
      return;
    }
    for (int x = from; x < ground; ++x) {
      chosen.push_back(x);
      extend(x + 1);
      chosen.pop_back();
    }
  };
  extend(0);

  std::vector<Edge> edges;
  auto n = static_cast<int>(masks.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((masks[i] & masks[j]) == 0)
        edges.push_back({i, j});
  return Graph(n, edges);
}

auto odd_graph(int k) -> Graph
{
  require(k >= 2, "odd graph needs k >= 2");
  return kneser_graph(2 * k - 1, k - 1);
}

auto petersen_graph() -> Graph { return odd_graph(3); }

auto hypercube_graph(int dimension) -> Graph
{
  require(dimension >= 1 && dimension <= 16, "hypercube needs 1 <= dimension <= 16");
  int n = 1 << dimension;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dimension; ++b)
      if (int w = v ^ (1 << b); v < w)
        edges.push_back({v, w});
  std::ranges::sort(edges);
  return Graph(n, edges);
}

namespace {

constexpr std::pair<Family, std::string_view> family_names[] = {
  {Family::path, "path"},
  {Family::cycle, "cycle"},
  {Family::complete, "complete"},
  {Family::complete_bipartite, "complete-bipartite"},
  {Family::star, "star"},
  {Family::kneser, "kneser"},
  {Family::odd_graph, "odd-graph"},
  {Family::petersen, "petersen"},
  {Family::hypercube, "hypercube"},
};

} // namespace

auto family_name(Family f) -> std::string_view
{
  for (auto [family, name] : family_names)
    if (family == f)
      return name;
  return "unknown";
}

auto parse_family(std::string_view name) -> Family
{
  for (auto [family, known] : family_names)
    if (known == name)
      return family;
  throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

auto generate(const GraphFamily & f) -> Graph
{
  switch (f.family) {
  case Family::path: return path_graph(f.p);
  case Family::cycle: return cycle_graph(f.p);
  case Family::complete: return complete_graph(f.p);
  case Family::complete_bipartite: return complete_bipartite_graph(f.p, f.q);
  case Family::star: return star_graph(f.p);
  case Family::kneser: return kneser_graph(f.p, f.q);
  case Family::odd_graph: return odd_graph(f.p);
  case Family::petersen: return petersen_graph();
  case Family::hypercube: return hypercube_graph(f.p);
  }
  throw std::invalid_argument("unknown graph family");
}

// ---- structure ----------------------------------------------------------

auto distances_from(const Graph & g, Vertex source) -> std::vector<int>
{
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (auto w : g.neighbours(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

auto components(const Graph & g) -> std::vector<VertexSet>
{
  std::vector<VertexSet> out;
  auto unseen = g.vertices();
  while (!unseen.empty()) {
    auto comp = g.empty_set();
    auto frontier = g.empty_set();
    frontier.insert(unseen.first());
    while (!frontier.empty()) {
      comp |= frontier;
      auto next = g.empty_set();
      for (auto v : frontier)
        next |= g.adjacency(v);
      frontier = next - comp;
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

auto is_connected(const Graph & g) -> bool { return components(g).size() <= 1; }

auto is_connected_subset(const Graph & g, const VertexSet & s) -> bool
{
  if (s.empty())
    return false;
  auto reached = g.empty_set();
  auto frontier = g.empty_set();
  frontier.insert(s.first());
  while (!frontier.empty()) {
    reached |= frontier;
    auto next = g.empty_set();
    for (auto v : frontier)
      next |= g.adjacency(v);
    frontier = (next & s) - reached;
  }
  return reached == s;
}

auto diameter(const Graph & g) -> std::optional<int>
{
  int best = 0;
  for (int v = 0; v < g.order(); ++v)
    for (auto d : distances_from(g, v)) {
      if (d < 0)
        return std::nullopt;
      best = std::max(best, d);
    }
  return best;
}

auto girth(const Graph & g) -> std::optional<int>
{
  std::optional<int> best;
  std::vector<int> dist(static_cast<std::size_t>(g.order()));
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()));
  for (int root = 0; root < g.order(); ++root) {
    std::ranges::fill(dist, -1);
    std::deque<Vertex> queue{root};
    dist[root] = 0;
    parent[root] = -1;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      if (best && 2 * dist[u] + 1 >= *best)
        break;
      for (auto w : g.neighbours(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        }
        else if (parent[u] != w) {
          auto len = dist[u] + dist[w] + 1;
          if (!best || len < *best)
            best = len;
        }
      }
    }
  }
  return best;
}

auto metrics(const Graph & g) -> Metrics
{
  Metrics m;
  m.components = components(g);
  m.connected = m.components.size() <= 1;
  if (m.connected)
    m.diameter = diameter(g);
  m.girth = girth(g);
  return m;
}

auto induced_subgraph(const Graph & g, const VertexSet & s) -> Graph
{
  if (s.universe() != static_cast<std::size_t>(g.order()))
    throw std::out_of_range("vertex set universe does not match graph order");
  if (s.empty())
    throw std::invalid_argument("induced subgraph of the empty set");
  auto members = s.to_vector();
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < members.size(); ++i)
    index[members[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (auto w : g.neighbours(members[i]))
      if (index[w] > static_cast<int>(i))
        edges.push_back({static_cast<int>(i), index[w]});
  return Graph(static_cast<int>(members.size()), edges);
}

} // namespace alliance
