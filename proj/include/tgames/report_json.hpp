// JSON views of reports. Objects use sorted keys, so output is byte-stable.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tgames/equilibria.hpp"
#include "tgames/games.hpp"
#include "tgames/reachability.hpp"
#include "tgames/temporal_graph.hpp"

namespace tgames {

using Json = nlohmann::json;

Json to_json(const Coloring& coloring);
Json to_json(const StrategyProfile& profile);
Json to_json(const ClassLabels& labels);

/// {"n","tau","game","positions","payoffs","coloring"[,"delta"][,"trace"]}
Json game_report_json(const TemporalGraph& g, const GameReport& report);

/// {"from","distances"}; unreachable targets are "inf".
Json distances_json(const TemporalDistanceRow& row);

Json classify_json(const TemporalGraph& g, const ClassLabels& labels);

/// {"profile","is_equilibrium","witness","method"}
Json nash_report_json(const NashReport& report);

/// One compact line plus newline, or indented by two spaces.
std::string dump(const Json& doc, bool pretty = false);

}  // namespace tgames
