#include "alliance/kernel.hpp"

#include <functional>

namespace alliance {

namespace {

constexpr std::pair<AllianceKind, std::string_view> kind_names[] = {
  {AllianceKind::defensive, "defensive"},
  {AllianceKind::strong, "strong"},
  {AllianceKind::global_defensive, "global-defensive"},
  {AllianceKind::global_strong, "global-strong"},
  {AllianceKind::global_connected_defensive, "global-connected-defensive"},
  {AllianceKind::global_connected_strong, "global-connected-strong"},
};

auto check_universe(const Graph & g, const VertexSet & s) -> void
{
  if (s.universe() != static_cast<std::size_t>(g.order()))
    throw std::out_of_range("vertex set universe does not match graph order");
}

} // namespace

auto kind_name(AllianceKind k) -> std::string_view
{
  for (auto [kind, name] : kind_names)
    if (kind == k)
      return name;
  return "unknown";
}

auto parse_kind(std::string_view name) -> AllianceKind
{
  for (auto [kind, known] : kind_names)
    if (known == name)
      return kind;
  throw std::invalid_argument("unknown alliance kind '" + std::string(name) + "'");
}

auto boundary_counts(const Graph & g, const VertexSet & s, Vertex v) -> BoundaryCount
{
  check_universe(g, s);
  if (v < 0 || v >= g.order())
    throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
  auto inside = g.adjacency(v).intersection_size(s);
  return {inside, g.degree(v) - inside};
}

auto dominates(const Graph & g, const VertexSet & s) -> bool
{
  check_universe(g, s);
  auto covered = s;
  for (auto v : s)
    covered |= g.adjacency(v);
  return covered.size() == g.order();
}

auto is_alliance(const Graph & g, const VertexSet & s, AllianceKind kind) -> bool
{
  check_universe(g, s);
  if (s.empty())
    throw std::invalid_argument("alliance candidate must be nonempty");
  for (auto v : s) {
    auto inside = g.adjacency(v).intersection_size(s);
    if (inside < required_inside(kind, g.degree(v)))
      return false;
  }
  if (is_global(kind) && !dominates(g, s))
    return false;
  if (is_connected_kind(kind) && !is_connected_subset(g, s))
    return false;
  return true;
}

namespace {

// Any proper nonempty subset of s that is an alliance; full enumeration.
auto has_alliance_proper_subset(const Graph & g, const VertexSet & s, AllianceKind kind) -> bool
{
  auto members = s.to_vector();
  auto k = members.size();
  auto subset = g.empty_set();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1u)
        subset.insert(members[i]);
    if (is_alliance(g, subset, kind))
      return true;
  }
  return false;
}

// Connected proper subsets of ⟨s⟩ that are alliances, grown from each root
// over members greater than the root.
auto has_connected_alliance_proper_subset(const Graph & g, const VertexSet & s, AllianceKind kind)
    -> bool
{
  auto target = s.size();
  bool found = false;
  std::function<void(VertexSet &, VertexSet, VertexSet &)> grow =
      [&](VertexSet & current, VertexSet extension, VertexSet & blocked) {
        if (found)
          return;
        if (current.size() < target && is_alliance(g, current, kind)) {
          found = true;
          return;
        }
        if (current.size() + 1 >= target)
          return;
        while (!extension.empty() && !found) {
          auto w = extension.first();
          extension.erase(w);
          auto fresh = (g.adjacency(w) & s) - blocked;
          auto next_blocked = blocked | fresh;
          auto next_ext = extension | fresh;
          current.insert(w);
          grow(current, next_ext, next_blocked);
          current.erase(w);
        }
      };

  for (auto root : s) {
    auto current = g.empty_set();
    current.insert(root);
    auto blocked = g.empty_set();
    for (auto u : s)
      if (u <= root)
        blocked.insert(u);
    auto extension = (g.adjacency(root) & s) - blocked;
    blocked |= extension;
    grow(current, extension, blocked);
    if (found)
      return true;
  }
  return false;
}

} // namespace

auto minimality(const Graph & g, const VertexSet & s, AllianceKind kind, int global_cap) -> Minimality
{
  if (!is_alliance(g, s, kind))
    throw std::invalid_argument("minimality asked of a set that is not an alliance of this kind");

  if (!is_global(kind)) {
    if (!is_connected_subset(g, s))
      return Minimality::not_minimal;
    if (s.size() <= full_subset_threshold)
      return has_alliance_proper_subset(g, s, kind) ? Minimality::not_minimal : Minimality::minimal;
    return has_connected_alliance_proper_subset(g, s, kind) ? Minimality::not_minimal
                                                            : Minimality::minimal;
  }

  if (s.size() > global_cap)
    return Minimality::unverified;
  return has_alliance_proper_subset(g, s, kind) ? Minimality::not_minimal : Minimality::minimal;
}

auto is_minimal_alliance(const Graph & g, const VertexSet & s, AllianceKind kind) -> bool
{
  switch (minimality(g, s, kind)) {
  case Minimality::minimal: return true;
  case Minimality::not_minimal: return false;
  case Minimality::unverified: break;
  }
  throw std::length_error("minimality of a global alliance above the enumeration cap");
}

} // namespace alliance
