#include "alliance/verify.hpp"

#include "alliance/bounds.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <sstream>
#include <thread>

namespace alliance {

auto all_check_ids() -> const std::vector<std::string> &
{
  static const std::vector<std::string> ids = {
    "handshake",
    "girth-oracle",
    "line-degree",
    "kind-monotonicity",
    "oracle-equivalence",
    "witness-validity",
    "order-chain",
    "half-order",
    "line-sandwich",
    "regular-corollary",
    "semiregular-exact",
    "small-class",
    "small-line-class",
    "global-bounds",
    "diameter-witness",
    "line-diameter",
    "comparison",
    "characteristic-set",
    "characteristic-connectivity",
    "five-regular-girth",
  };
  return ids;
}

auto family_check_ids() -> const std::vector<std::string> &
{
  static const std::vector<std::string> ids = {
    "handshake",     "line-degree", "line-sandwich", "regular-corollary", "semiregular-exact",
    "small-class",   "small-line-class", "comparison", "five-regular-girth",
  };
  return ids;
}

namespace {

using K = AllianceKind;

auto kind_index(AllianceKind k) -> std::size_t { return static_cast<std::size_t>(k); }

auto format_set(const VertexSet & s) -> std::string
{
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto v : s) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  out << '}';
  return out.str();
}

/// Lazily computed alliance numbers of Γ and L(Γ).
class GraphContext
{
public:
  GraphContext(const Graph & g, const VerifyOptions & options) : g_(g), options_(options)
  {
    if (g.size() >= 1)
      line_.emplace(g);
  }

  auto graph() const -> const Graph & { return g_; }
  auto has_line() const -> bool { return line_.has_value(); }
  auto line() const -> const LineGraph & { return *line_; }
  auto target(bool on_line) const -> const Graph & { return on_line ? line_->graph() : g_; }

  /// Solver result, or nullptr when the kind is infeasible here.
  auto solved(AllianceKind kind, bool on_line) -> const SolveResult *
  {
    auto & slot = (on_line ? line_solved_ : solved_)[kind_index(kind)];
    if (!slot) {
      try {
        slot = Entry{min_alliance(target(on_line), kind, options_.budget)};
      }
      catch (const InfeasibleError &) {
        slot = Entry{};
      }
    }
    return slot->result ? &*slot->result : nullptr;
  }

  auto oracle_available(bool on_line) const -> bool
  {
    return target(on_line).order() <= (on_line ? options_.line_oracle_cap : options_.graph_oracle_cap);
  }

  /// Oracle result, or nullptr when infeasible or above the cap.
  auto oracle(AllianceKind kind, bool on_line) -> const SolveResult *
  {
    if (!oracle_available(on_line))
      return nullptr;
    auto & slot = (on_line ? line_oracle_ : oracle_)[kind_index(kind)];
    if (!slot) {
      auto cap = on_line ? options_.line_oracle_cap : options_.graph_oracle_cap;
      try {
        slot = Entry{brute_force_oracle(target(on_line), kind, cap)};
      }
      catch (const InfeasibleError &) {
        slot = Entry{};
      }
    }
    return slot->result ? &*slot->result : nullptr;
  }

  /// Oracle value when within the cap, else the certified solver value.
  auto reference(AllianceKind kind, bool on_line) -> std::optional<int>
  {
    if (oracle_available(on_line)) {
      auto r = oracle(kind, on_line);
      return r ? std::optional<int>(r->value) : std::nullopt;
    }
    auto r = solved(kind, on_line);
    if (!r || !r->certified)
      return std::nullopt;
    return r->value;
  }

  /// A value already computed by some check, without triggering a search.
  auto known(AllianceKind kind, bool on_line) const -> std::optional<int>
  {
    for (const auto * table : {on_line ? &line_oracle_ : &oracle_, on_line ? &line_solved_ : &solved_}) {
      const auto & slot = (*table)[kind_index(kind)];
      if (slot && slot->result && slot->result->certified)
        return slot->result->value;
    }
    return std::nullopt;
  }

private:
  struct Entry
  {
    std::optional<SolveResult> result;
  };

  const Graph & g_;
  const VerifyOptions & options_;
  std::optional<LineGraph> line_;
  std::array<std::optional<Entry>, 6> solved_, line_solved_, oracle_, line_oracle_;
};

class Checker
{
public:
  Checker(const Graph & g, const VerifyOptions & options, GraphOutcome & outcome, std::vector<Violation> & sink)
    : ctx_(g, options), g_(g), options_(options), outcome_(outcome), sink_(sink)
  {
  }

  auto run(const std::vector<std::string> & checks) -> void
  {
    for (const auto & id : checks) {
      current_ = id;
      bool ran = dispatch(id);
      if (ran)
        outcome_.checks_run.push_back(id);
    }
    record_values();
  }

private:
  auto fail(const std::string & details) -> void
  {
    ++outcome_.violations;
    sink_.push_back({outcome_.graph6, current_, details});
  }

  auto expect(bool ok, const std::string & details) -> void
  {
    if (!ok)
      fail(details);
  }

  auto ref(K kind, bool line) -> std::optional<int>
  {
    auto value = ctx_.reference(kind, line);
    if (!value && !(is_connected_kind(kind) && !is_connected(ctx_.target(line))))
      if (auto r = ctx_.solved(kind, line); r && !r->certified)
        fail(std::string(line ? "L: " : "") + std::string(kind_name(kind)) + " search exceeded its budget");
    return value;
  }

  auto dispatch(const std::string & id) -> bool
  {
    if (id == "handshake") return handshake();
    if (id == "girth-oracle") return girth_oracle();
    if (id == "line-degree") return line_degree();
    if (id == "kind-monotonicity") return kind_monotonicity();
    if (id == "oracle-equivalence") return oracle_equivalence();
    if (id == "witness-validity") return witness_validity();
    if (id == "order-chain") return order_chain();
    if (id == "half-order") return half_order();
    if (id == "line-sandwich") return line_sandwich();
    if (id == "regular-corollary") return regular_corollary();
    if (id == "semiregular-exact") return semiregular_exact();
    if (id == "small-class") return small_class();
    if (id == "small-line-class") return small_line_class();
    if (id == "global-bounds") return global_bounds();
    if (id == "diameter-witness") return diameter_witness();
    if (id == "line-diameter") return line_diameter();
    if (id == "comparison") return comparison();
    if (id == "characteristic-set") return characteristic_set();
    if (id == "characteristic-connectivity") return characteristic_connectivity();
    if (id == "five-regular-girth") return five_regular_girth();
    throw std::invalid_argument("unknown check '" + id + "'");
  }

  auto handshake() -> bool
  {
    auto seq = degree_sequence(g_);
    int sum = 0;
    for (auto d : seq)
      sum += d;
    expect(sum == 2 * g_.size(), "degree sum " + std::to_string(sum) + " != 2m");
    expect(std::ranges::is_sorted(seq, std::greater<>{}), "degree sequence not non-increasing");
    expect(parse_graph6(encode_graph6(g_)) == g_, "graph6 round trip changed the adjacency");
    return true;
  }

  // Shortest cycle through each edge: remove it and measure the detour.
  auto girth_oracle() -> bool
  {
    if (g_.order() > 64)
      return false;
    std::optional<int> shortest;
    for (auto [u, v] : g_.edges()) {
      std::vector<Edge> rest;
      for (auto e : g_.edges())
        if (!(e.u == u && e.v == v))
          rest.push_back(e);
      auto d = distances_from(Graph(g_.order(), rest), u)[v];
      if (d > 0 && (!shortest || d + 1 < *shortest))
        shortest = d + 1;
    }
    auto fast = girth(g_);
    expect(fast == shortest, "girth " + (fast ? std::to_string(*fast) : "acyclic") + " vs edge oracle " +
                                 (shortest ? std::to_string(*shortest) : "acyclic"));
    auto m = metrics(g_);
    expect(m.diameter.has_value() == m.connected, "diameter finiteness disagrees with connectivity");
    return true;
  }

  auto line_degree() -> bool
  {
    if (!ctx_.has_line())
      return false;
    const auto & lg = ctx_.line();
    const auto & line = lg.graph();
    expect(line.order() == g_.size(), "line graph order != m");
    int expected_edges = 0;
    for (int v = 0; v < g_.order(); ++v)
      expected_edges += g_.degree(v) * (g_.degree(v) - 1) / 2;
    expect(line.size() == expected_edges, "line graph size " + std::to_string(line.size()) +
                                              " != sum C(deg,2) = " + std::to_string(expected_edges));
    for (int e = 0; e < line.order(); ++e) {
      auto [u, v] = lg.edge_of(e);
      expect(line.degree(e) == edge_vertex_degree(g_, u, v),
             "line vertex " + std::to_string(e) + " degree differs from d(u)+d(v)-2");
    }
    return true;
  }

  auto kind_monotonicity() -> bool
  {
    if (g_.order() > options_.subset_check_max_n)
      return false;
    auto n = g_.order();
    auto s = g_.empty_set();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      s.clear();
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1u)
          s.insert(v);
      std::array<bool, 6> holds{};
      for (auto k : all_kinds)
        holds[kind_index(k)] = is_alliance(g_, s, k);
      auto at = [&](K k) { return holds[kind_index(k)]; };
      bool ok = (!at(K::strong) || at(K::defensive)) && (!at(K::global_strong) || at(K::global_defensive)) &&
                (!at(K::global_connected_strong) || at(K::global_connected_defensive)) &&
                (!at(K::global_defensive) || at(K::defensive)) && (!at(K::global_strong) || at(K::strong)) &&
                (!at(K::global_connected_defensive) || at(K::global_defensive)) &&
                (!at(K::global_connected_strong) || at(K::global_strong));
      expect(ok, "kind implications fail for " + format_set(s));
      for (int v = 0; v < n; ++v) {
        auto b = boundary_counts(g_, s, v);
        if (b.inside + b.outside != g_.degree(v))
          fail("boundary counts do not partition N(" + std::to_string(v) + ")");
      }
    }
    expect(is_alliance(g_, g_.vertices(), K::global_strong), "V is not a global strong alliance");
    return true;
  }

  auto oracle_equivalence() -> bool
  {
    for (bool line : {false, true}) {
      if (line && !ctx_.has_line())
        continue;
      if (!ctx_.oracle_available(line))
        continue;
      for (auto k : all_kinds) {
        auto o = ctx_.oracle(k, line);
        auto s = ctx_.solved(k, line);
        auto label = std::string(line ? "L: " : "") + std::string(kind_name(k));
        if (!o || !s) {
          expect(!o && !s, label + ": feasibility differs between solver and oracle");
          continue;
        }
        expect(s->certified, label + ": solver not certified");
        expect(o->value == s->value,
               label + ": solver " + std::to_string(s->value) + " vs oracle " + std::to_string(o->value));
        expect(o->witness == s->witness,
               label + ": witness " + format_set(s->witness) + " vs oracle " + format_set(o->witness));
      }
    }
    return true;
  }

  auto witness_validity() -> bool
  {
    for (bool line : {false, true}) {
      if (line && !ctx_.has_line())
        continue;
      const auto & target = ctx_.target(line);
      for (auto k : all_kinds) {
        auto s = ctx_.solved(k, line);
        if (!s || !s->certified)
          continue;
        auto label = std::string(line ? "L: " : "") + std::string(kind_name(k));
        expect(s->witness.size() == s->value, label + ": witness size differs from value");
        if (!is_alliance(target, s->witness, k)) {
          fail(label + ": witness " + format_set(s->witness) + " is not an alliance");
          continue;
        }
        if (!is_global(k)) {
          expect(is_minimal_alliance(target, s->witness, k), label + ": witness is not minimal");
          expect(is_connected_subset(target, s->witness), label + ": minimal witness is disconnected");
        }
      }
    }
    return true;
  }

  auto order_chain() -> bool
  {
    for (bool line : {false, true}) {
      if (line && !ctx_.has_line())
        continue;
      auto a = ref(K::defensive, line), as = ref(K::strong, line);
      auto ga = ref(K::global_defensive, line), gs = ref(K::global_strong, line);
      auto ca = ref(K::global_connected_defensive, line), cs = ref(K::global_connected_strong, line);
      auto le = [](std::optional<int> x, std::optional<int> y) { return !x || !y || *x <= *y; };
      auto label = std::string(line ? "L: " : "");
      expect(le(a, as), label + "a > strong a");
      expect(le(a, ga), label + "a > global a");
      expect(le(ga, ca), label + "global a > global connected a");
      expect(le(as, gs), label + "strong a > global strong a");
      expect(le(gs, cs), label + "global strong a > global connected strong a");
      expect(le(ga, gs), label + "global a > global strong a");
    }
    return true;
  }

  auto half_order() -> bool
  {
    for (bool line : {false, true}) {
      if (line && !ctx_.has_line())
        continue;
      auto n = ctx_.target(line).order();
      if (auto a = ref(K::defensive, line))
        expect(*a <= static_cast<int>(ceil_div(n, 2)),
               std::string(line ? "L: " : "") + "a = " + std::to_string(*a) + " > ceil(n/2)");
    }
    return true;
  }

  auto line_sandwich() -> bool
  {
    if (!ctx_.has_line())
      return false;
    auto s = line_alliance_sandwich(g_);
    if (auto a = ref(K::defensive, true))
      expect(s.defensive.lower <= *a && *a <= s.defensive.upper,
             "a(L) = " + std::to_string(*a) + " outside [" + std::to_string(s.defensive.lower) + "," +
                 std::to_string(s.defensive.upper) + "]");
    if (auto as = ref(K::strong, true))
      expect(s.strong.lower <= *as && *as <= s.strong.upper,
             "strong a(L) = " + std::to_string(*as) + " outside [" + std::to_string(s.strong.lower) + "," +
                 std::to_string(s.strong.upper) + "]");
    return true;
  }

  auto regular_corollary() -> bool
  {
    auto d = regular_line_exact(g_);
    if (!d)
      return false;
    // The edges at one vertex form a strong alliance of size δ in L(Γ).
    auto star = ctx_.line().edges_at(0);
    expect(star.size() == *d && is_alliance(ctx_.line().graph(), star, K::strong),
           "edges at vertex 0 are not a strong alliance of size " + std::to_string(*d));
    for (auto k : {K::defensive, K::strong})
      if (auto v = ref(k, true))
        expect(*v == *d, "L: " + std::string(kind_name(k)) + " = " + std::to_string(*v) + " but regular degree is " +
                             std::to_string(*d));
    return true;
  }

  auto semiregular_exact() -> bool
  {
    auto exact = semiregular_line_exact(g_);
    if (!exact)
      return false;
    if (auto a = ref(K::defensive, true))
      expect(*a == exact->defensive,
             "a(L) = " + std::to_string(*a) + " vs closed form " + std::to_string(exact->defensive));
    if (auto as = ref(K::strong, true))
      expect(*as == exact->strong,
             "strong a(L) = " + std::to_string(*as) + " vs closed form " + std::to_string(exact->strong));
    return true;
  }

  auto class_agrees(const SmallAllianceClass & c, std::optional<int> value, const std::string & label) -> void
  {
    if (!value)
      return;
    auto expected = std::min(*value, 4);
    expect(c.alliance_class == expected, label + " class " + std::to_string(c.alliance_class) + " but value is " +
                                             std::to_string(*value));
  }

  auto small_class() -> bool
  {
    class_agrees(classify_small_alliance(g_), ref(K::defensive, false), "a(G)");
    return true;
  }

  auto small_line_class() -> bool
  {
    if (!ctx_.has_line())
      return false;
    class_agrees(classify_small_line_alliance(g_), ref(K::defensive, true), "a(L)");
    return true;
  }

  auto at_least(std::optional<int> value, int bound, const std::string & label) -> void
  {
    if (value)
      expect(bound <= *value, label + ": bound " + std::to_string(bound) + " > value " + std::to_string(*value));
  }

  auto global_bounds() -> bool
  {
    auto gb = global_degree_bounds(g_);
    at_least(ref(K::global_defensive, false), gb.defensive, "global a(G) degree bound");
    at_least(ref(K::global_strong, false), gb.strong, "global strong a(G) degree bound");
    if (ctx_.has_line()) {
      if (auto b = line_global_sqrt_bound(g_))
        at_least(ref(K::global_defensive, true), *b, "global a(L) sqrt bound");
      auto lb = line_global_degree_bounds(g_);
      at_least(ref(K::global_defensive, true), lb.defensive, "global a(L) degree-sum bound");
      at_least(ref(K::global_strong, true), lb.strong, "global strong a(L) degree-sum bound");
      // The same order/degree bound applied to L(Γ) itself.
      auto direct = global_degree_bounds(ctx_.line().graph());
      at_least(ref(K::global_defensive, true), direct.defensive, "global a(L) direct degree bound");
      at_least(ref(K::global_strong, true), direct.strong, "global strong a(L) direct degree bound");
    }
    if (is_connected(g_)) {
      auto cb = connected_global_bounds(g_);
      at_least(ref(K::global_connected_defensive, false), cb.graph, "global connected a(G) diameter bound");
      if (cb.line)
        at_least(ref(K::global_connected_defensive, true), *cb.line, "global connected a(L) diameter bound");
    }
    return true;
  }

  auto diameter_witness() -> bool
  {
    bool ran = false;
    for (bool line : {false, true}) {
      if (line && !ctx_.has_line())
        continue;
      const auto & target = ctx_.target(line);
      auto d = diameter(target);
      if (!d)
        continue;
      for (auto k : {K::global_connected_defensive, K::global_connected_strong}) {
        auto s = ctx_.solved(k, line);
        if (!s || !s->certified)
          continue;
        ran = true;
        expect(dominates(target, s->witness) && is_connected_subset(target, s->witness),
               "witness is not a connected dominating set");
        expect(*d <= s->witness.size() + 1, std::string(line ? "L: " : "") + "D = " + std::to_string(*d) +
                                                " > |S| + 1 for " + format_set(s->witness));
      }
    }
    return ran;
  }

  auto line_diameter() -> bool
  {
    if (g_.size() < 2 || !is_connected(g_))
      return false;
    auto d = diameter(g_);
    auto dl = diameter(ctx_.line().graph());
    expect(dl.has_value(), "line graph of a connected graph is disconnected");
    if (d && dl)
      expect(*d - 1 <= *dl, "D(G) - 1 = " + std::to_string(*d - 1) + " > D(L) = " + std::to_string(*dl));
    return true;
  }

  auto comparison() -> bool
  {
    if (comparison_verdict(g_) != Verdict::guaranteed)
      return ctx_.has_line();
    auto a = ref(K::defensive, false);
    auto al = ref(K::defensive, true);
    if (a && al)
      expect(*a <= *al, "verdict guaranteed but a(G) = " + std::to_string(*a) + " > a(L) = " + std::to_string(*al));
    return true;
  }

  auto characteristic_set() -> bool
  {
    if (!ctx_.has_line() || g_.order() > options_.characteristic_max_n)
      return false;
    auto c = check_characteristic_set_theorem(g_, options_.line_oracle_cap);
    if (auto al = ref(K::defensive, true))
      expect(c.line_alliance_number == *al, "characteristic-set enumeration found a(L) = " +
                                                std::to_string(c.line_alliance_number) + " vs " +
                                                std::to_string(*al));
    if (c.hypothesis_met) {
      expect(c.holds, "characteristic set holds no defensive alliance of size <= a(L)");
      auto a = ref(K::defensive, false);
      if (a)
        expect(*a <= c.line_alliance_number, "hypothesis met but a(G) = " + std::to_string(*a) + " > a(L) = " +
                                                 std::to_string(c.line_alliance_number));
    }
    return true;
  }

  // Connected line-vertex sets map to connected vertex sets of at most one
  // more element.
  auto characteristic_connectivity() -> bool
  {
    if (!ctx_.has_line())
      return false;
    const auto & lg = ctx_.line();
    auto check = [&](const VertexSet & s_l) {
      auto c = lg.characteristic_set(s_l);
      expect(is_connected_subset(g_, c) && c.size() <= s_l.size() + 1,
             "characteristic set of connected " + format_set(s_l) + " is " + format_set(c));
      return true;
    };
    for_each_connected_subset(lg.graph(), std::min(3, lg.graph().order()), check);
    for (auto k : {K::defensive, K::strong})
      if (auto s = ctx_.solved(k, true); s && s->certified)
        check(s->witness);
    return true;
  }

  auto five_regular_girth() -> bool
  {
    if (g_.order() == 0 || g_.min_degree() != 5 || g_.max_degree() != 5)
      return false;
    auto gi = girth(g_);
    auto s = ctx_.solved(K::defensive, false);
    if (!gi || !s || !s->certified) {
      fail("5-regular graph without a certified alliance number or girth");
      return true;
    }
    expect(s->value == *gi, "a = " + std::to_string(s->value) + " but girth = " + std::to_string(*gi));
    auto cycle = induced_subgraph(g_, s->witness);
    bool is_cycle = is_connected(cycle) && cycle.min_degree() == 2 && cycle.max_degree() == 2;
    expect(is_cycle, "minimum alliance " + format_set(s->witness) + " does not induce a cycle");
    return true;
  }

  auto record_values() -> void
  {
    for (bool line : {false, true}) {
      if (line && !ctx_.has_line())
        continue;
      for (auto k : all_kinds) {
        // Only report what some check already computed.
        auto value = ctx_.known(k, line);
        if (value)
          outcome_.values[(line ? "line:" : "") + std::string(kind_name(k))] = *value;
      }
    }
  }

  GraphContext ctx_;
  const Graph & g_;
  const VerifyOptions & options_;
  GraphOutcome & outcome_;
  std::vector<Violation> & sink_;
  std::string current_;
};

auto selected_checks(const VerifyOptions & options) -> std::vector<std::string>
{
  if (options.checks.empty())
    return all_check_ids();
  for (const auto & c : options.checks)
    if (std::ranges::find(all_check_ids(), c) == all_check_ids().end())
      throw std::invalid_argument("unknown check '" + c + "'");
  std::vector<std::string> out;
  for (const auto & c : all_check_ids())
    if (options.checks.contains(c))
      out.push_back(c);
  return out;
}

auto find_tight_examples(const std::vector<Graph> & graphs, const std::vector<GraphOutcome> & outcomes)
    -> std::vector<TightExample>
{
  std::vector<TightExample> out;
  auto note = [&](const std::string & bound, std::size_t i, int value) {
    for (const auto & t : out)
      if (t.bound == bound)
        return;
    out.push_back({bound, outcomes[i].graph6, value});
  };
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto & g = graphs[i];
    const auto & values = outcomes[i].values;
    auto value = [&](const std::string & key) -> std::optional<int> {
      auto it = values.find(key);
      return it == values.end() ? std::nullopt : std::optional<int>(it->second);
    };
    if (auto b = line_global_sqrt_bound(g); b && value("line:global-defensive") == *b)
      note("line-global-sqrt", i, *b);
    if (g.order() >= 1 && is_connected(g)) {
      auto cb = connected_global_bounds(g);
      if (g.order() >= 2 && value("global-connected-defensive") == cb.graph)
        note("connected-global-diameter", i, cb.graph);
      if (cb.line && g.size() >= 2 && value("line:global-connected-defensive") == *cb.line)
        note("connected-global-diameter-line", i, *cb.line);
    }
  }
  return out;
}

} // namespace

auto verify_graphs(const std::vector<Graph> & graphs, const std::string & corpus, const VerifyOptions & options)
    -> VerificationRun
{
  VerificationRun run;
  run.corpus = corpus;
  run.checks = selected_checks(options);

  // Stable order: by graph6 string.
  std::vector<std::size_t> order(graphs.size());
  std::vector<std::string> codes;
  for (const auto & g : graphs)
    codes.push_back(encode_graph6(g));
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  std::ranges::stable_sort(order, [&](std::size_t a, std::size_t b) { return codes[a] < codes[b]; });

  std::vector<Graph> sorted;
  for (auto i : order)
    sorted.push_back(graphs[i]);

  std::vector<GraphOutcome> outcomes(sorted.size());
  std::vector<std::vector<Violation>> found(sorted.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      auto i = next.fetch_add(1);
      if (i >= sorted.size())
        return;
      auto & outcome = outcomes[i];
      outcome.graph6 = codes[order[i]];
      outcome.order = sorted[i].order();
      outcome.size = sorted[i].size();
      Checker(sorted[i], options, outcome, found[i]).run(run.checks);
    }
  };

  auto threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(sorted.size(), 1)));
  if (threads <= 1)
    worker();
  else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(worker);
  }

  for (auto & list : found)
    for (auto & v : list)
      run.violations.push_back(std::move(v));
  for (const auto & o : outcomes)
    for (const auto & c : o.checks_run)
      ++run.executed[c];
  run.tight_examples = find_tight_examples(sorted, outcomes);
  run.outcomes = std::move(outcomes);
  return run;
}

auto star_erratum(std::span<const int> leaves) -> std::vector<StarErratumRow>
{
  std::vector<StarErratumRow> rows;
  for (auto n : leaves) {
    auto lg = line_graph(star_graph(n));
    auto a = brute_force_oracle(lg.graph(), AllianceKind::defensive).value;
    auto as = brute_force_oracle(lg.graph(), AllianceKind::strong).value;
    rows.push_back({n, n - 1, a, as, static_cast<int>(ceil_div(n, 2)), static_cast<int>(ceil_div(n + 1, 2)),
                    a == n - 1});
  }
  return rows;
}

} // namespace alliance
