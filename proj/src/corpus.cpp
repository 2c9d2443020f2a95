#include "alliance/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace alliance {

namespace {

// Depth-first search over degree-respecting relabellings, keeping the largest
// code. Column j of the graph6 triangle is fixed once position j is placed,
// so a prefix smaller than the best prefix is abandoned immediately.
class CanonicalSearch
{
public:
  explicit CanonicalSearch(const Graph & g) : g_(g), n_(g.order())
  {
    if (n_ > max_enumerated_order)
      throw std::length_error("canonical form limited to " + std::to_string(max_enumerated_order) + " vertices");
    auto seq = g.degree_sequence();
    wanted_.assign(seq.begin(), seq.end());
    total_bits_ = n_ * (n_ - 1) / 2;
    placed_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), false);
  }

  auto run() -> std::pair<std::uint64_t, std::vector<Vertex>>
  {
    place(0, 0, 0);
    return {best_code_, best_perm_};
  }

private:
  auto place(int pos, std::uint64_t code, int bits) -> void
  {
    if (pos == n_) {
      if (!have_best_ || code > best_code_) {
        have_best_ = true;
        best_code_ = code;
        best_perm_ = placed_;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used_[v] || g_.degree(v) != wanted_[pos])
        continue;
      auto next = code;
      for (int i = 0; i < pos; ++i)
        next = (next << 1) | (g_.adjacent(placed_[i], v) ? 1u : 0u);
      int next_bits = bits + pos;
      if (have_best_) {
        auto best_prefix = best_code_ >> (total_bits_ - next_bits);
        if (next < best_prefix)
          continue;
      }
      used_[v] = true;
      placed_[pos] = v;
      place(pos + 1, next, next_bits);
      used_[v] = false;
    }
  }

  const Graph & g_;
  int n_;
  int total_bits_;
  std::vector<int> wanted_;
  std::vector<Vertex> placed_;
  std::vector<bool> used_;
  bool have_best_ = false;
  std::uint64_t best_code_ = 0;
  std::vector<Vertex> best_perm_;
};

auto relabel(const Graph & g, const std::vector<Vertex> & perm) -> Graph
{
  // perm[i] is the old vertex placed at new position i.
  std::vector<int> position(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    position[perm[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    edges.push_back({std::min(position[u], position[v]), std::max(position[u], position[v])});
  return Graph(g.order(), edges);
}

} // namespace

auto canonical_code(const Graph & g) -> std::uint64_t { return CanonicalSearch(g).run().first; }

auto canonical_form(const Graph & g) -> Graph { return relabel(g, CanonicalSearch(g).run().second); }

auto enumerate_graphs(int n, bool connected_only) -> std::vector<Graph>
{
  if (n < 1 || n > max_enumerated_order)
    throw std::invalid_argument("graph enumeration supports 1.." + std::to_string(max_enumerated_order) +
                                " vertices");

  // Every graph on n vertices is some graph on n−1 vertices plus one vertex.
  std::vector<Graph> level{Graph(1, {})};
  for (int order = 2; order <= n; ++order) {
    std::set<std::uint64_t> seen;
    std::vector<Graph> next;
    for (const auto & base : level) {
      auto base_edges = base.edges();
      for (std::uint32_t mask = 0; mask < (1u << (order - 1)); ++mask) {
        auto edges = base_edges;
        for (int v = 0; v < order - 1; ++v)
          if ((mask >> v) & 1u)
            edges.push_back({v, order - 1});
        Graph candidate(order, edges);
        CanonicalSearch search(candidate);
        auto [code, perm] = search.run();
        if (seen.insert(code).second)
          next.push_back(relabel(candidate, perm));
      }
    }
    level = std::move(next);
  }

  std::vector<Graph> out;
  for (auto & g : level)
    if (!connected_only || is_connected(g))
      out.push_back(std::move(g));
  std::ranges::sort(out, {}, [](const Graph & g) { return encode_graph6(g); });
  return out;
}

auto connected_corpus(int max_n) -> std::vector<Graph>
{
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto & g : enumerate_graphs(n, true))
      out.push_back(std::move(g));
  return out;
}

auto load_graph6_file(const std::filesystem::path & path) -> std::vector<Graph>
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot read corpus file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph6_corpus(buffer.str());
}

} // namespace alliance
