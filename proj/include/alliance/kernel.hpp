#pragma once

#include "alliance/graph.hpp"

#include <array>
#include <string_view>

namespace alliance {

enum class AllianceKind
{
  defensive,
  strong,
  global_defensive,
  global_strong,
  global_connected_defensive,
  global_connected_strong,
};

inline constexpr std::array<AllianceKind, 6> all_kinds = {
  AllianceKind::defensive,
  AllianceKind::strong,
  AllianceKind::global_defensive,
  AllianceKind::global_strong,
  AllianceKind::global_connected_defensive,
  AllianceKind::global_connected_strong,
};

constexpr auto is_strong(AllianceKind k) -> bool
{
  return k == AllianceKind::strong || k == AllianceKind::global_strong ||
         k == AllianceKind::global_connected_strong;
}

constexpr auto is_global(AllianceKind k) -> bool
{
  return k != AllianceKind::defensive && k != AllianceKind::strong;
}

constexpr auto is_connected_kind(AllianceKind k) -> bool
{
  return k == AllianceKind::global_connected_defensive || k == AllianceKind::global_connected_strong;
}

/// CLI spelling: "defensive", "strong", "global-defensive", ...
auto kind_name(AllianceKind k) -> std::string_view;
auto parse_kind(std::string_view name) -> AllianceKind;

/// Minimum |N_S(v)| a member of degree `degree` needs: ⌊δ/2⌋ when
/// defensive (2|N_S|+1 ≥ δ), ⌈δ/2⌉ when strong (2|N_S| ≥ δ).
constexpr auto required_inside(AllianceKind k, int degree) -> int
{
  return is_strong(k) ? (degree + 1) / 2 : degree / 2;
}

struct BoundaryCount
{
  int inside;
  int outside;
};

/// |N_S(v)| and |N_{V∖S}(v)|.
auto boundary_counts(const Graph & g, const VertexSet & s, Vertex v) -> BoundaryCount;

/// Throws std::invalid_argument when s is empty: alliances are nonempty by
/// definition, and an empty candidate always indicates a caller bug.
auto is_alliance(const Graph & g, const VertexSet & s, AllianceKind kind) -> bool;

/// Every vertex outside s has a neighbour in s.
auto dominates(const Graph & g, const VertexSet & s) -> bool;

enum class Minimality
{
  minimal,
  not_minimal,
  unverified,
};

/// Subsets of this size or less are checked by enumerating every proper subset.
inline constexpr int full_subset_threshold = 16;

/**
 * Whether no nonempty proper subset of the alliance s is an alliance of the
 * same kind. For defensive and strong kinds the check is always exact: a
 * disconnected ⟨s⟩ is never minimal (each component is itself an alliance),
 * and for connected ⟨s⟩ only connected proper subsets need testing. Global
 * kinds fall back to full enumeration and report `unverified` beyond
 * `global_cap` members.
 *
 * Throws std::invalid_argument if s is not an alliance of the given kind.
 */
auto minimality(const Graph & g, const VertexSet & s, AllianceKind kind, int global_cap = 20)
    -> Minimality;

/// minimality() as a boolean; throws std::length_error when it is unverified.
auto is_minimal_alliance(const Graph & g, const VertexSet & s, AllianceKind kind) -> bool;

} // namespace alliance
