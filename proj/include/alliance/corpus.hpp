#pragma once

#include "alliance/graph.hpp"

#include <cstdint>
#include <filesystem>
#include <vector>

namespace alliance {

/// Largest order handled by the canonical-form enumeration.
inline constexpr int max_enumerated_order = 8;

/**
 * Canonical adjacency code of a graph with at most max_enumerated_order
 * vertices: the maximum graph6-order upper-triangle bit string over all
 * relabellings that list vertices by non-increasing degree. Two graphs share
 * a code iff they are isomorphic.
 */
auto canonical_code(const Graph & g) -> std::uint64_t;

/// The relabelling of g realising canonical_code().
auto canonical_form(const Graph & g) -> Graph;

/// One canonical representative per isomorphism class of graphs on n
/// vertices (connected ones only if requested), sorted by graph6 string.
auto enumerate_graphs(int n, bool connected_only) -> std::vector<Graph>;

/// Connected graphs on 1..max_n vertices, grouped by order.
auto connected_corpus(int max_n) -> std::vector<Graph>;

/// Reads a multi-record .g6 file. Throws std::runtime_error if unreadable.
auto load_graph6_file(const std::filesystem::path & path) -> std::vector<Graph>;

} // namespace alliance
