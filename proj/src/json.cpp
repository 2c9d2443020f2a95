#include "alliance/json.hpp"

namespace alliance {

using nlohmann::json;

auto to_json(const VertexSet & s) -> json
{
  auto out = json::array();
  for (auto v : s)
    out.push_back(v);
  return out;
}

auto to_json(const SolveResult & r) -> json
{
  return {
    {"kind", kind_name(r.kind)},
    {"value", r.value},
    {"witness", to_json(r.witness)},
    {"method", method_name(r.method)},
    {"nodes_explored", r.nodes_explored},
    {"certified", r.certified},
  };
}

auto to_json(const LineSolveResult & r) -> json
{
  auto out = to_json(r.result);
  auto edges = json::array();
  for (auto e : r.witness_edges)
    edges.push_back({e.u, e.v});
  out["witness_edges"] = edges;
  return out;
}

auto to_json(const Metrics & m) -> json
{
  auto comps = json::array();
  for (const auto & c : m.components)
    comps.push_back(to_json(c));
  return {
    {"connected", m.connected},
    {"components", comps},
    {"diameter", m.diameter ? json(*m.diameter) : json("infinite")},
    {"girth", m.girth ? json(*m.girth) : json("acyclic")},
  };
}

auto to_json(const SmallAllianceClass & c) -> json
{
  json out = {
    {"class", c.alliance_class < 4 ? json(c.alliance_class) : json(">=4")},
    {"vertices", c.vertices},
  };
  out["pattern"] = c.pattern ? json(pattern_name(*c.pattern)) : json(nullptr);
  return out;
}

namespace {

auto optional_int(const std::optional<int> & v) -> json { return v ? json(*v) : json(nullptr); }

} // namespace

auto to_json(const BoundReport & r) -> json
{
  auto entries = json::array();
  for (const auto & e : r.entries)
    entries.push_back({
      {"id", e.id},
      {"target", {{"graph", e.target.line ? "line" : "base"}, {"kind", kind_name(e.target.kind)}}},
      {"applicable", e.applicable},
      {"reason", e.reason},
      {"lower", optional_int(e.lower)},
      {"upper", optional_int(e.upper)},
      {"exact", optional_int(e.exact)},
      {"statement", e.statement},
    });
  json out = {
    {"entries", entries},
    {"comparison", verdict_name(r.comparison)},
    {"small_class", to_json(r.small_class)},
  };
  out["small_line_class"] = r.small_line_class ? to_json(*r.small_line_class) : json(nullptr);
  return out;
}

auto to_json(const CharacteristicSetCheck & c) -> json
{
  auto opt_set = [](const std::optional<VertexSet> & s) { return s ? to_json(*s) : json(nullptr); };
  return {
    {"line_alliance_number", c.line_alliance_number},
    {"minimum_alliances", c.minimum_alliances},
    {"qualifying_alliances", c.qualifying_alliances},
    {"hypothesis_met", c.hypothesis_met},
    {"holds", c.holds},
    {"line_alliance", opt_set(c.line_alliance)},
    {"characteristic_set", opt_set(c.characteristic)},
    {"contained_alliance", opt_set(c.contained_alliance)},
  };
}

auto to_json(const VerificationRun & run) -> json
{
  auto graphs = json::array();
  for (const auto & o : run.outcomes)
    graphs.push_back({
      {"graph6", o.graph6},
      {"n", o.order},
      {"m", o.size},
      {"values", o.values},
      {"checks", o.checks_run},
      {"violations", o.violations},
    });
  auto violations = json::array();
  for (const auto & v : run.violations)
    violations.push_back({{"graph6", v.graph6}, {"check", v.check}, {"details", v.details}});
  auto tight = json::array();
  for (const auto & t : run.tight_examples)
    tight.push_back({{"bound", t.bound}, {"graph6", t.graph6}, {"value", t.value}});
  return {
    {"corpus", run.corpus},
    {"checks", run.checks},
    {"graphs", graphs},
    {"violations", violations},
    {"tight_examples", tight},
    {"notes", run.notes},
    {"summary",
     {
       {"graphs", run.outcomes.size()},
       {"checks_executed", run.executed},
       {"violations", run.violations.size()},
       {"ok", run.ok()},
     }},
  };
}

auto to_json(const std::vector<StarErratumRow> & rows) -> json
{
  auto out = json::array();
  for (const auto & r : rows)
    out.push_back({
      {"leaves", r.leaves},
      {"remark_value", r.remark_value},
      {"oracle_defensive", r.oracle_value},
      {"oracle_strong", r.strong_oracle_value},
      {"closed_form_defensive", r.closed_form},
      {"closed_form_strong", r.strong_closed_form},
      {"remark_agrees", r.remark_agrees},
      {"erratum", !r.remark_agrees},
    });
  return out;
}

auto edge_map_json(const LineGraph & lg) -> nlohmann::ordered_json
{
  auto out = nlohmann::ordered_json::object();
  for (int e = 0; e < lg.graph().order(); ++e) {
    auto [u, v] = lg.edge_of(e);
    out[std::to_string(e)] = {u, v};
  }
  return out;
}

} // namespace alliance
