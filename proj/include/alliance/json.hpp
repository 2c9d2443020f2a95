#pragma once

#include "alliance/bounds.hpp"
#include "alliance/solver.hpp"
#include "alliance/verify.hpp"

#include <json.hpp>

namespace alliance {

auto to_json(const VertexSet & s) -> nlohmann::json;
auto to_json(const SolveResult & r) -> nlohmann::json;
auto to_json(const LineSolveResult & r) -> nlohmann::json;
auto to_json(const Metrics & m) -> nlohmann::json;
auto to_json(const SmallAllianceClass & c) -> nlohmann::json;
auto to_json(const BoundReport & r) -> nlohmann::json;
auto to_json(const CharacteristicSetCheck & c) -> nlohmann::json;
auto to_json(const VerificationRun & run) -> nlohmann::json;
auto to_json(const std::vector<StarErratumRow> & rows) -> nlohmann::json;

/// {"0": [u, v], ...} keyed by line-vertex id.
auto edge_map_json(const LineGraph & lg) -> nlohmann::ordered_json;

} // namespace alliance
