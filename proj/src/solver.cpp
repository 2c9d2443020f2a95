#include "alliance/solver.hpp"

#include "alliance/bounds.hpp"

#include <algorithm>
#include <numeric>

namespace alliance {

auto method_name(SearchMethod m) -> std::string_view
{
  switch (m) {
  case SearchMethod::enumeration: return "enumeration";
  case SearchMethod::branch_and_bound: return "branch-and-bound";
  case SearchMethod::oracle: return "oracle";
  }
  return "unknown";
}

namespace {

struct BudgetExhausted
{
};

class NodeCounter
{
public:
  explicit NodeCounter(const Budget & budget)
    : budget_(budget), start_(std::chrono::steady_clock::now())
  {
  }

  auto tick() -> void
  {
    ++nodes_;
    if (budget_.max_nodes && nodes_ > *budget_.max_nodes)
      throw BudgetExhausted{};
    if (budget_.max_time && (nodes_ & 1023u) == 0 &&
        std::chrono::steady_clock::now() - start_ > *budget_.max_time)
      throw BudgetExhausted{};
  }

  auto nodes() const -> std::uint64_t { return nodes_; }

private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

/**
 * Connected-subset enumeration of exactly `size` vertices, restricted to
 * `allowed`. Every connected set is produced once, from its lowest vertex:
 * the extension set only ever holds vertices above the root that are not yet
 * adjacent to the current set. `prune(current, remaining)` may cut a branch.
 */
template <typename Prune, typename Visit>
class ConnectedSubsets
{
public:
  ConnectedSubsets(const Graph & g, const VertexSet & allowed, int size, Prune & prune, Visit & visit,
                   NodeCounter * counter)
    : g_(g), allowed_(allowed), size_(size), prune_(prune), visit_(visit), counter_(counter)
  {
  }

  /// Returns false if `visit` asked to stop.
  auto run() -> bool
  {
    for (auto root : allowed_) {
      auto current = g_.empty_set();
      current.insert(root);
      auto blocked = g_.empty_set();
      for (int u = 0; u <= root; ++u)
        blocked.insert(u);
      auto extension = (g_.adjacency(root) & allowed_) - blocked;
      blocked |= g_.adjacency(root);
      if (!grow(current, extension, blocked))
        return false;
    }
    return true;
  }

private:
  auto grow(VertexSet & current, VertexSet extension, const VertexSet & blocked) -> bool
  {
    if (counter_)
      counter_->tick();
    auto have = current.size();
    if (have == size_)
      return visit_(current);
    if (prune_(current, size_ - have))
      return true;
    while (!extension.empty()) {
      auto w = extension.first();
      extension.erase(w);
      auto fresh = (g_.adjacency(w) & allowed_) - blocked;
      current.insert(w);
      bool go_on = grow(current, extension | fresh, blocked | g_.adjacency(w));
      current.erase(w);
      if (!go_on)
        return false;
    }
    return true;
  }

  const Graph & g_;
  const VertexSet & allowed_;
  int size_;
  Prune & prune_;
  Visit & visit_;
  NodeCounter * counter_;
};

template <typename Prune, typename Visit>
auto connected_subsets_of_size(const Graph & g, const VertexSet & allowed, int size, Prune & prune,
                               Visit & visit, NodeCounter * counter) -> bool
{
  return ConnectedSubsets<Prune, Visit>(g, allowed, size, prune, visit, counter).run();
}

// ---- defensive / strong -------------------------------------------------

auto solve_local(const Graph & g, AllianceKind kind, NodeCounter & counter, int & proven_lower,
                 std::optional<VertexSet> & incumbent) -> SolveResult
{
  std::vector<int> need(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v)
    need[v] = required_inside(kind, g.degree(v));

  for (int k = 1; k <= g.order(); ++k) {
    proven_lower = k;
    // Members of a k-alliance need at most k−1 inside neighbours.
    auto allowed = g.empty_set();
    for (int v = 0; v < g.order(); ++v)
      if (need[v] <= k - 1)
        allowed.insert(v);

    auto prune = [&](const VertexSet & current, int remaining) {
      for (auto v : current)
        if (g.adjacency(v).intersection_size(current) + remaining < need[v])
          return true;
      return false;
    };
    std::optional<VertexSet> best;
    auto visit = [&](const VertexSet & s) {
      if (is_alliance(g, s, kind) && (!best || lex_less(s, *best))) {
        best = s;
        incumbent = s;
      }
      return true;
    };
    connected_subsets_of_size(g, allowed, k, prune, visit, &counter);
    if (best)
      return {kind, k, *best, SearchMethod::enumeration, counter.nodes(), true};
  }
  throw std::logic_error("no alliance found; every nonempty graph has one");
}

// ---- global kinds -------------------------------------------------------

/**
 * Branch-and-bound over include/exclude decisions on one connected graph.
 * With `target` unset it minimises; with `target` set it looks for the
 * first alliance of exactly that size in include-first order, which is the
 * lexicographically least one when decisions follow increasing vertex ids.
 */
class GlobalSearch
{
public:
  GlobalSearch(const Graph & g, AllianceKind kind, std::vector<Vertex> order, NodeCounter & counter)
    : g_(g), kind_(kind), order_(std::move(order)), counter_(counter), in_(g.empty_set()),
      out_(g.empty_set()), all_(g.vertices())
  {
    for (int v = 0; v < g.order(); ++v)
      need_.push_back(required_inside(kind, g.degree(v)));
    reach_ = g.max_degree() + 1;
  }

  auto minimise(int root_lower, int best, VertexSet witness) -> std::pair<int, VertexSet>
  {
    target_.reset();
    root_lower_ = root_lower;
    best_ = best;
    witness_ = std::move(witness);
    done_ = best_ <= root_lower_;
    if (!done_)
      node(0);
    return {best_, witness_};
  }

  auto find_exact(int size) -> std::optional<VertexSet>
  {
    target_ = size;
    root_lower_ = 0;
    done_ = false;
    found_.reset();
    node(0);
    return found_;
  }

private:
  auto node(std::size_t depth) -> void
  {
    counter_.tick();
    auto undecided = all_ - in_ - out_;
    auto possible = in_ | undecided;

    int deficit = 0;
    for (auto v : in_) {
      auto inside = g_.adjacency(v).intersection_size(in_);
      if (inside + g_.adjacency(v).intersection_size(undecided) < need_[v])
        return;
      deficit = std::max(deficit, need_[v] - inside);
    }

    auto dominated = in_;
    for (auto v : in_)
      dominated |= g_.adjacency(v);
    for (auto v : out_)
      if (!dominated.contains(v) && !g_.adjacency(v).intersects(possible))
        return;

    if (is_connected_kind(kind_) && !in_.empty() && !reaches_all_of_in(possible))
      return;

    int undominated = g_.order() - dominated.size();
    int extra = std::max(deficit, static_cast<int>(ceil_div(undominated, reach_)));
    int lower = in_.size() + extra;
    if (target_) {
      if (lower > *target_)
        return;
    }
    else if (std::max(lower, root_lower_) >= best_)
      return;

    if (!in_.empty() && is_alliance(g_, in_, kind_)) {
      if (target_) {
        if (in_.size() == *target_) {
          found_ = in_;
          done_ = true;
        }
      }
      else {
        best_ = in_.size();
        witness_ = in_;
        done_ = best_ <= root_lower_;
      }
      return;
    }

    while (depth < order_.size() && !undecided.contains(order_[depth]))
      ++depth;
    if (depth == order_.size())
      return;
    auto v = order_[depth];

    in_.insert(v);
    node(depth + 1);
    in_.erase(v);
    if (done_)
      return;
    out_.insert(v);
    node(depth + 1);
    out_.erase(v);
  }

  // Every chosen vertex lies in one component of ⟨in ∪ undecided⟩.
  auto reaches_all_of_in(const VertexSet & possible) const -> bool
  {
    auto reached = g_.empty_set();
    auto frontier = g_.empty_set();
    frontier.insert(in_.first());
    while (!frontier.empty()) {
      reached |= frontier;
      if (in_.is_subset_of(reached))
        return true;
      auto next = g_.empty_set();
      for (auto v : frontier)
        next |= g_.adjacency(v);
      frontier = (next & possible) - reached;
    }
    return in_.is_subset_of(reached);
  }

  const Graph & g_;
  AllianceKind kind_;
  std::vector<Vertex> order_;
  NodeCounter & counter_;
  std::vector<int> need_;
  int reach_ = 1;

  VertexSet in_;
  VertexSet out_;
  VertexSet all_;

  std::optional<int> target_;
  int root_lower_ = 0;
  int best_ = 0;
  VertexSet witness_;
  std::optional<VertexSet> found_;
  bool done_ = false;
};

auto root_lower_bound(const Graph & g, AllianceKind kind) -> int
{
  auto degree_bounds = global_degree_bounds(g);
  int lower = is_strong(kind) ? degree_bounds.strong : degree_bounds.defensive;
  if (is_connected_kind(kind))
    lower = std::max(lower, connected_global_bounds(g).graph);
  return std::max(lower, 1);
}

// Solves one connected graph; returns (value, lexicographically least witness).
auto solve_global_connected_graph(const Graph & g, AllianceKind kind, NodeCounter & counter, int & lower_out,
                                  std::optional<VertexSet> & incumbent) -> std::pair<int, VertexSet>
{
  int root_lower = root_lower_bound(g, kind);
  lower_out = root_lower;

  std::vector<Vertex> by_degree(static_cast<std::size_t>(g.order()));
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::ranges::stable_sort(by_degree, [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  GlobalSearch optimiser(g, kind, by_degree, counter);
  incumbent = g.vertices();
  auto [value, witness] = optimiser.minimise(root_lower, g.order(), g.vertices());
  incumbent = witness;
  lower_out = value;

  std::vector<Vertex> by_id(static_cast<std::size_t>(g.order()));
  std::iota(by_id.begin(), by_id.end(), 0);
  GlobalSearch lexicographic(g, kind, by_id, counter);
  auto least = lexicographic.find_exact(value);
  if (!least)
    throw std::logic_error("exact-size search missed the optimum");
  return {value, *least};
}

auto solve_global(const Graph & g, AllianceKind kind, NodeCounter & counter, int & proven_lower,
                  std::optional<VertexSet> & incumbent) -> SolveResult
{
  auto parts = components(g);
  if (is_connected_kind(kind) && parts.size() > 1)
    throw InfeasibleError(std::string(kind_name(kind)) + " alliance needs a connected graph; this one has " +
                          std::to_string(parts.size()) + " components");

  // Lower bounds of the components not yet solved still count.
  std::vector<int> lowers;
  for (const auto & part : parts)
    lowers.push_back(root_lower_bound(induced_subgraph(g, part), kind));

  int total = 0;
  auto witness = g.empty_set();
  auto partial = g.empty_set();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto members = parts[i].to_vector();
    auto sub = induced_subgraph(g, parts[i]);
    int lower = lowers[i];
    std::optional<VertexSet> sub_incumbent;
    try {
      auto [value, sub_witness] = solve_global_connected_graph(sub, kind, counter, lower, sub_incumbent);
      total += value;
      lowers[i] = value;
      for (auto v : sub_witness)
        witness.insert(members[v]);
    }
    catch (const BudgetExhausted &) {
      lowers[i] = lower;
      proven_lower = std::accumulate(lowers.begin(), lowers.end(), 0);
      // Best known: solved components, this component's incumbent, and every
      // vertex of the components not reached yet.
      auto best = witness;
      for (auto v : sub_incumbent.value_or(sub.vertices()))
        best.insert(members[v]);
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        best |= parts[j];
      incumbent = best;
      throw;
    }
  }
  proven_lower = total;
  return {kind, total, witness, SearchMethod::branch_and_bound, counter.nodes(), true};
}

} // namespace

auto min_alliance(const Graph & g, AllianceKind kind, const Budget & budget) -> SolveResult
{
  if (g.order() == 0)
    throw std::invalid_argument("alliance numbers of the empty graph are undefined");

  NodeCounter counter(budget);
  int proven_lower = 1;
  std::optional<VertexSet> incumbent;
  try {
    if (is_global(kind))
      return solve_global(g, kind, counter, proven_lower, incumbent);
    return solve_local(g, kind, counter, proven_lower, incumbent);
  }
  catch (const BudgetExhausted &) {
    SolveResult partial;
    partial.kind = kind;
    partial.value = proven_lower;
    partial.witness = incumbent.value_or(g.empty_set());
    partial.method = is_global(kind) ? SearchMethod::branch_and_bound : SearchMethod::enumeration;
    partial.nodes_explored = counter.nodes();
    partial.certified = false;
    return partial;
  }
}

auto for_each_connected_subset(const Graph & g, int max_size,
                               const std::function<bool(const VertexSet &)> & visit) -> void
{
  if (max_size < 1)
    throw std::invalid_argument("max_size must be at least 1");
  auto allowed = g.vertices();
  auto no_prune = [](const VertexSet &, int) { return false; };
  for (int k = 1; k <= std::min(max_size, g.order()); ++k) {
    auto forward = [&](const VertexSet & s) { return visit(s); };
    if (!connected_subsets_of_size(g, allowed, k, no_prune, forward, nullptr))
      return;
  }
}

auto enumerate_connected_subsets(const Graph & g, int max_size) -> std::vector<VertexSet>
{
  std::vector<VertexSet> out;
  for_each_connected_subset(g, max_size, [&](const VertexSet & s) {
    out.push_back(s);
    return true;
  });
  return out;
}

auto brute_force_oracle(const Graph & g, AllianceKind kind, int cap) -> SolveResult
{
  auto n = g.order();
  if (n == 0)
    throw std::invalid_argument("alliance numbers of the empty graph are undefined");
  if (n > cap || n > 30)
    throw std::length_error("oracle limited to " + std::to_string(std::min(cap, 30)) + " vertices, graph has " +
                            std::to_string(n));

  std::uint64_t tested = 0;
  auto candidate = g.empty_set();
  for (int k = 1; k <= n; ++k) {
    std::optional<VertexSet> best;
    // Every mask with k bits set, in increasing numeric order.
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
      ++tested;
      candidate.clear();
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1u)
          candidate.insert(v);
      if (is_alliance(g, candidate, kind) && (!best || lex_less(candidate, *best)))
        best = candidate;
      auto low = mask & (~mask + 1);
      auto ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    if (best)
      return {kind, k, *best, SearchMethod::oracle, tested, true};
  }
  throw InfeasibleError(std::string("no ") + std::string(kind_name(kind)) + " alliance exists in this graph");
}

auto line_alliance_number(const Graph & g, AllianceKind kind, const Budget & budget) -> LineSolveResult
{
  auto lg = line_graph(g);
  auto result = min_alliance(lg.graph(), kind, budget);
  auto edges = lg.edge_list(result.witness);
  return {std::move(result), std::move(edges)};
}

} // namespace alliance
