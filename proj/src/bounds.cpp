#include "alliance/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace alliance {

auto ceil_sqrt(long long x) -> long long
{
  if (x <= 0)
    return 0;
  auto s = static_cast<long long>(std::sqrt(static_cast<double>(x)));
  while (s * s < x)
    ++s;
  while (s > 0 && (s - 1) * (s - 1) >= x)
    --s;
  return s;
}

namespace {

auto require_edges(const Graph & g) -> void
{
  if (g.size() == 0)
    throw std::invalid_argument("edgeless graph has no line graph");
}

// ⌈√x − 1⌉ = ⌈√x⌉ − 1.
auto ceil_sqrt_minus_one(long long x) -> int { return static_cast<int>(ceil_sqrt(x)) - 1; }

} // namespace

auto line_alliance_sandwich(const Graph & g) -> LineSandwich
{
  require_edges(g);
  auto seq = g.degree_sequence();
  auto n = seq.size();
  int low_pair = seq[n - 1] + seq[n - 2];
  int top = seq[0];
  bool unique = n == 1 || seq[1] < top;

  LineSandwich out{};
  out.unique_max_degree = unique;
  out.defensive = {static_cast<int>(ceil_div(std::max(low_pair - 1, 0), 2)), unique ? top - 1 : top};
  out.strong = {static_cast<int>(ceil_div(low_pair, 2)), top};
  return out;
}

auto regular_line_exact(const Graph & g) -> std::optional<int>
{
  if (g.order() == 0 || g.max_degree() == 0 || g.max_degree() != g.min_degree())
    return std::nullopt;
  return g.max_degree();
}

auto detect_semiregular_bipartite(const Graph & g) -> std::optional<DegreePair>
{
  if (g.order() == 0 || g.min_degree() == 0)
    return std::nullopt;

  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  std::optional<DegreePair> pair;
  for (int root = 0; root < g.order(); ++root) {
    if (colour[root] >= 0)
      continue;
    int side_degree[2] = {-1, -1};
    std::deque<Vertex> queue{root};
    colour[root] = 0;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      auto & d = side_degree[colour[u]];
      if (d < 0)
        d = g.degree(u);
      else if (d != g.degree(u))
        return std::nullopt;
      for (auto w : g.neighbours(u)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        }
        else if (colour[w] == colour[u])
          return std::nullopt;
      }
    }
    DegreePair here{std::max(side_degree[0], side_degree[1]), std::min(side_degree[0], side_degree[1])};
    if (pair && (pair->high != here.high || pair->low != here.low))
      return std::nullopt;
    pair = here;
  }
  return pair;
}

auto semiregular_line_exact(const Graph & g) -> std::optional<LineExact>
{
  auto sides = detect_semiregular_bipartite(g);
  if (!sides)
    return std::nullopt;
  int sum = sides->high + sides->low;
  return LineExact{static_cast<int>(ceil_div(sum - 1, 2)), static_cast<int>(ceil_div(sum, 2))};
}

auto pattern_name(Pattern p) -> std::string_view
{
  switch (p) {
  case Pattern::leaf: return "leaf";
  case Pattern::edge: return "edge";
  case Pattern::k2_component: return "K2-component";
  case Pattern::p3: return "P3";
  case Pattern::p4: return "P4";
  case Pattern::k3: return "K3";
  case Pattern::k1_3: return "K1,3";
  }
  return "unknown";
}

auto classify_small_alliance(const Graph & g) -> SmallAllianceClass
{
  if (g.order() == 0)
    throw std::invalid_argument("classification of the empty graph");
  auto d = [&](Vertex v) { return g.degree(v); };

  for (int v = 0; v < g.order(); ++v)
    if (d(v) <= 1)
      return {1, Pattern::leaf, {v}};

  for (auto [u, v] : g.edges())
    if (d(u) <= 3 && d(v) <= 3)
      return {2, Pattern::edge, {u, v}};

  // Induced P_3: both ends of degree ≤ 3, centre ≤ 5.
  for (int v = 0; v < g.order(); ++v) {
    if (d(v) > 5)
      continue;
    auto nb = g.neighbours(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (d(nb[i]) <= 3 && d(nb[j]) <= 3 && !g.adjacent(nb[i], nb[j]))
          return {3, Pattern::p3, {nb[i], v, nb[j]}};
  }

  for (auto [u, v] : g.edges())
    for (auto w : g.neighbours(v))
      if (w > v && g.adjacent(u, w) && d(u) <= 5 && d(v) <= 5 && d(w) <= 5)
        return {3, Pattern::k3, {u, v, w}};

  return {};
}

auto classify_small_line_alliance(const Graph & g) -> SmallAllianceClass
{
  require_edges(g);
  auto d = [&](Vertex v) { return g.degree(v); };
  auto edges = g.edges();

  for (auto [u, v] : edges) {
    if (d(u) == 1 && d(v) == 1)
      return {1, Pattern::k2_component, {u, v}};
    if (d(u) == 1 && d(v) == 2)
      return {1, Pattern::leaf, {u, v}};
    if (d(v) == 1 && d(u) == 2)
      return {1, Pattern::leaf, {v, u}};
  }

  // P_3 subgraph u-v-w with δ(u)+δ(v) ≤ 5 and δ(v)+δ(w) ≤ 5.
  for (int v = 0; v < g.order(); ++v) {
    auto nb = g.neighbours(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (d(nb[i]) + d(v) <= 5 && d(v) + d(nb[j]) <= 5)
          return {2, Pattern::p3, {nb[i], v, nb[j]}};
  }

  // P_4 subgraph u-v-w-x: outer edges sum ≤ 5, middle edge ≤ 7.
  for (auto [a, b] : edges)
    for (auto [v, w] : {std::pair{a, b}, std::pair{b, a}}) {
      if (d(v) + d(w) > 7)
        continue;
      for (auto u : g.neighbours(v)) {
        if (u == w || d(u) + d(v) > 5)
          continue;
        for (auto x : g.neighbours(w))
          if (x != v && x != u && d(w) + d(x) <= 5)
            return {3, Pattern::p4, {u, v, w, x}};
      }
    }

  for (auto [u, v] : edges)
    for (auto w : g.neighbours(v))
      if (w > v && g.adjacent(u, w) && d(u) + d(v) <= 7 && d(u) + d(w) <= 7 && d(v) + d(w) <= 7)
        return {3, Pattern::k3, {u, v, w}};

  for (int v = 0; v < g.order(); ++v) {
    std::vector<Vertex> leaves;
    for (auto u : g.neighbours(v))
      if (d(v) + d(u) <= 7)
        leaves.push_back(u);
    if (leaves.size() >= 3)
      return {3, Pattern::k1_3, {v, leaves[0], leaves[1], leaves[2]}};
  }

  return {};
}

auto line_global_sqrt_bound(const Graph & g) -> std::optional<int>
{
  if (g.size() <= 6)
    return std::nullopt;
  return ceil_sqrt_minus_one(g.size() + 4);
}

auto global_degree_bounds(const Graph & g) -> GlobalLowerBounds
{
  if (g.order() == 0)
    throw std::invalid_argument("global bounds of the empty graph");
  long long n = g.order();
  long long top = g.max_degree();
  return {static_cast<int>(ceil_div(2 * n, top + 3)), static_cast<int>(ceil_div(n, top / 2 + 1))};
}

auto line_global_degree_bounds(const Graph & g) -> GlobalLowerBounds
{
  require_edges(g);
  auto seq = g.degree_sequence();
  long long m = g.size();
  long long top_two = seq[0] + seq[1];
  return {static_cast<int>(ceil_div(2 * m, top_two + 1)), static_cast<int>(ceil_div(2 * m, top_two))};
}

auto connected_global_bounds(const Graph & g) -> ConnectedGlobalBounds
{
  auto diam = diameter(g);
  if (g.order() == 0 || !diam)
    throw std::invalid_argument("connected global bounds need a connected graph");
  ConnectedGlobalBounds out{ceil_sqrt_minus_one(*diam + g.order()), std::nullopt};
  if (g.size() >= 1)
    out.line = ceil_sqrt_minus_one(*diam + g.size() - 1);
  return out;
}

auto verdict_name(Verdict v) -> std::string_view
{
  switch (v) {
  case Verdict::guaranteed: return "guaranteed";
  case Verdict::inconclusive: return "inconclusive";
  case Verdict::not_applicable: return "not-applicable";
  }
  return "unknown";
}

auto comparison_verdict(const Graph & g) -> Verdict
{
  if (g.size() == 0)
    return Verdict::not_applicable;
  long long n = g.order();
  auto seq = g.degree_sequence();
  long long lowest = seq[n - 1];
  long long line_lower = ceil_div(std::max<long long>(seq[n - 1] + seq[n - 2] - 1, 0), 2);
  if (ceil_div(n, 2) <= line_lower || n < 2 * lowest)
    return Verdict::guaranteed;
  return Verdict::inconclusive;
}

namespace {

// Calls visit on every k-subset of 0..n-1 in lexicographic order.
template <typename Visit>
auto for_each_combination(int n, int k, Visit && visit) -> void
{
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    idx[i] = i;
  while (true) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i)
      --i;
    if (i < 0)
      return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

} // namespace

auto check_characteristic_set_theorem(const Graph & g, int max_line_order) -> CharacteristicSetCheck
{
  auto lg = line_graph(g);
  const auto & line = lg.graph();
  if (line.order() > max_line_order)
    throw std::length_error("line graph order " + std::to_string(line.order()) + " above cap " +
                            std::to_string(max_line_order));

  CharacteristicSetCheck out;
  auto candidate = line.empty_set();
  for (int k = 1; k <= line.order() && out.minimum_alliances == 0; ++k) {
    for_each_combination(line.order(), k, [&](const std::vector<int> & idx) {
      candidate.clear();
      for (auto e : idx)
        candidate.insert(e);
      if (!is_alliance(line, candidate, AllianceKind::defensive))
        return;
      out.line_alliance_number = k;
      ++out.minimum_alliances;
      auto chars = lg.characteristic_set(candidate);
      if (!is_alliance(g, chars, AllianceKind::defensive))
        return;
      if (out.qualifying_alliances++ == 0) {
        out.line_alliance = candidate;
        out.characteristic = chars;
      }
    });
  }

  out.hypothesis_met = out.qualifying_alliances > 0;
  if (!out.hypothesis_met)
    return out;

  // Smallest defensive alliance of g inside the characteristic set.
  auto members = out.characteristic->to_vector();
  auto sub = g.empty_set();
  for (int k = 1; k <= static_cast<int>(members.size()) && !out.contained_alliance; ++k)
    for_each_combination(static_cast<int>(members.size()), k, [&](const std::vector<int> & idx) {
      if (out.contained_alliance)
        return;
      sub.clear();
      for (auto i : idx)
        sub.insert(members[i]);
      if (is_alliance(g, sub, AllianceKind::defensive))
        out.contained_alliance = sub;
    });
  out.holds = out.contained_alliance && out.contained_alliance->size() <= out.line_alliance_number;
  return out;
}

namespace {

auto not_applicable(std::string id, BoundTarget target, std::string reason, std::string statement)
    -> BoundEntry
{
  BoundEntry e;
  e.id = std::move(id);
  e.target = target;
  e.applicable = false;
  e.reason = std::move(reason);
  e.statement = std::move(statement);
  return e;
}

auto applicable(std::string id, BoundTarget target, std::string reason, std::string statement,
                std::optional<int> lower, std::optional<int> upper) -> BoundEntry
{
  BoundEntry e;
  e.id = std::move(id);
  e.target = target;
  e.applicable = true;
  e.reason = std::move(reason);
  e.statement = std::move(statement);
  e.lower = lower;
  e.upper = upper;
  if (lower && upper && *lower == *upper)
    e.exact = lower;
  return e;
}

} // namespace

auto bound_report(const Graph & g) -> BoundReport
{
  using K = AllianceKind;
  BoundReport report;
  auto & out = report.entries;
  bool has_edges = g.size() >= 1;

  const std::string sandwich_a = "ceil((d_n + d_{n-1} - 1)/2) <= a(L) <= d_1, or d_1 - 1 if d_1 is attained once";
  const std::string sandwich_s = "ceil((d_n + d_{n-1})/2) <= strong a(L) <= d_1";
  if (has_edges) {
    auto s = line_alliance_sandwich(g);
    out.push_back(applicable("line-sandwich-defensive", {true, K::defensive},
                             s.unique_max_degree ? "m >= 1; unique vertex of maximum degree" : "m >= 1",
                             sandwich_a, s.defensive.lower, s.defensive.upper));
    out.push_back(applicable("line-sandwich-strong", {true, K::strong}, "m >= 1", sandwich_s, s.strong.lower,
                             s.strong.upper));
  }
  else {
    out.push_back(not_applicable("line-sandwich-defensive", {true, K::defensive}, "m = 0", sandwich_a));
    out.push_back(not_applicable("line-sandwich-strong", {true, K::strong}, "m = 0", sandwich_s));
  }

  const std::string regular_stmt = "d-regular with d > 0 => a(L) = strong a(L) = d";
  if (auto r = regular_line_exact(g)) {
    out.push_back(applicable("regular-line-exact-defensive", {true, K::defensive}, "regular of degree " + std::to_string(*r),
                             regular_stmt, *r, *r));
    out.push_back(applicable("regular-line-exact-strong", {true, K::strong}, "regular of degree " + std::to_string(*r),
                             regular_stmt, *r, *r));
  }
  else {
    out.push_back(not_applicable("regular-line-exact-defensive", {true, K::defensive},
                                 "not regular of positive degree", regular_stmt));
    out.push_back(not_applicable("regular-line-exact-strong", {true, K::strong},
                                 "not regular of positive degree", regular_stmt));
  }

  const std::string semi_a = "(d1,d2)-semiregular bipartite => a(L) = ceil((d1 + d2 - 1)/2)";
  const std::string semi_s = "(d1,d2)-semiregular bipartite => strong a(L) = ceil((d1 + d2)/2)";
  if (auto sides = detect_semiregular_bipartite(g)) {
    auto exact = *semiregular_line_exact(g);
    auto why = "(" + std::to_string(sides->high) + "," + std::to_string(sides->low) + ")-semiregular bipartite";
    out.push_back(applicable("semiregular-line-exact-defensive", {true, K::defensive}, why, semi_a,
                             exact.defensive, exact.defensive));
    out.push_back(applicable("semiregular-line-exact-strong", {true, K::strong}, why, semi_s, exact.strong,
                             exact.strong));
  }
  else {
    out.push_back(not_applicable("semiregular-line-exact-defensive", {true, K::defensive},
                                 "not semiregular bipartite", semi_a));
    out.push_back(not_applicable("semiregular-line-exact-strong", {true, K::strong},
                                 "not semiregular bipartite", semi_s));
  }

  const std::string sqrt_stmt = "m > 6 => global a(L) >= ceil(sqrt(m + 4) - 1)";
  if (auto b = line_global_sqrt_bound(g))
    out.push_back(applicable("line-global-sqrt", {true, K::global_defensive}, "m > 6", sqrt_stmt, *b, std::nullopt));
  else
    out.push_back(not_applicable("line-global-sqrt", {true, K::global_defensive}, "m <= 6", sqrt_stmt));

  if (g.order() >= 1) {
    auto b = global_degree_bounds(g);
    out.push_back(applicable("global-degree-defensive", {false, K::global_defensive}, "n >= 1",
                             "global a(G) >= ceil(2n/(d_1 + 3))", b.defensive, std::nullopt));
    out.push_back(applicable("global-degree-strong", {false, K::global_strong}, "n >= 1",
                             "global strong a(G) >= ceil(n/(floor(d_1/2) + 1))", b.strong, std::nullopt));
  }

  const std::string line_deg_a = "global a(L) >= ceil(2m/(d_1 + d_2 + 1))";
  const std::string line_deg_s = "global strong a(L) >= ceil(2m/(d_1 + d_2))";
  if (has_edges) {
    auto b = line_global_degree_bounds(g);
    out.push_back(applicable("line-global-degree-defensive", {true, K::global_defensive}, "m >= 1", line_deg_a,
                             b.defensive, std::nullopt));
    out.push_back(applicable("line-global-degree-strong", {true, K::global_strong}, "m >= 1", line_deg_s, b.strong,
                             std::nullopt));
  }
  else {
    out.push_back(not_applicable("line-global-degree-defensive", {true, K::global_defensive}, "m = 0", line_deg_a));
    out.push_back(not_applicable("line-global-degree-strong", {true, K::global_strong}, "m = 0", line_deg_s));
  }

  const std::string diam_g = "connected => global connected a(G) >= ceil(sqrt(D + n) - 1)";
  const std::string diam_l = "connected => global connected a(L) >= ceil(sqrt(D + m - 1) - 1)";
  if (g.order() >= 1 && is_connected(g)) {
    auto b = connected_global_bounds(g);
    out.push_back(applicable("connected-global-diameter", {false, K::global_connected_defensive}, "connected",
                             diam_g, b.graph, std::nullopt));
    if (b.line)
      out.push_back(applicable("connected-global-diameter-line", {true, K::global_connected_defensive},
                               "connected, m >= 1", diam_l, *b.line, std::nullopt));
    else
      out.push_back(
          not_applicable("connected-global-diameter-line", {true, K::global_connected_defensive}, "m = 0", diam_l));
  }
  else {
    out.push_back(not_applicable("connected-global-diameter", {false, K::global_connected_defensive},
                                 "disconnected (infinite diameter)", diam_g));
    out.push_back(not_applicable("connected-global-diameter-line", {true, K::global_connected_defensive},
                                 "disconnected (infinite diameter)", diam_l));
  }

  if (g.order() >= 1) {
    report.small_class = classify_small_alliance(g);
    auto c = report.small_class.alliance_class;
    auto e = applicable("small-alliance-class", {false, K::defensive}, "degree patterns on at most 3 vertices",
                        "a(G) in {1,2,3} decided by leaf / edge / P3 / K3 degree patterns", c,
                        c < 4 ? std::optional<int>(c) : std::nullopt);
    out.push_back(e);
  }
  if (has_edges) {
    report.small_line_class = classify_small_line_alliance(g);
    auto c = report.small_line_class->alliance_class;
    out.push_back(applicable("small-line-alliance-class", {true, K::defensive},
                             "degree-sum patterns on at most 4 vertices",
                             "a(L) in {1,2,3} decided by K2-component / pendant / P3 / P4 / K3 / K1,3 patterns", c,
                             c < 4 ? std::optional<int>(c) : std::nullopt));
  }

  report.comparison = comparison_verdict(g);
  return report;
}

} // namespace alliance
