#include "tgames/report_json.hpp"

namespace tgames {

Json to_json(const Coloring& coloring) { return Json(coloring.values()); }

Json to_json(const StrategyProfile& profile) { return Json(profile.positions); }

Json to_json(const ClassLabels& labels) {
  return Json{{"underlying", to_string(labels.underlying_kind)},
              {"superset", labels.is_superset},
              {"growing", labels.is_growing},
              {"shrinking", labels.is_shrinking},
              {"static", labels.is_static}};
}

Json game_report_json(const TemporalGraph& g, const GameReport& report) {
  Json doc{{"n", g.vertex_count()},
           {"tau", g.lifetime()},
           {"game", to_string(report.variant)},
           {"positions", to_json(report.profile)},
           {"payoffs", report.payoffs},
           {"coloring", to_json(report.coloring)}};
  if (report.delta) doc["delta"] = *report.delta;
  if (report.trace) {
    Json rows = Json::array();
    for (const auto& step : *report.trace) rows.push_back(to_json(step.coloring));
    doc["trace"] = std::move(rows);
  }
  return doc;
}

Json distances_json(const TemporalDistanceRow& row) {
  Json values = Json::array();
  for (const auto& a : row.arrival) {
    if (a.is_finite()) {
      values.push_back(a.steps());
    } else {
      values.push_back("inf");
    }
  }
  return Json{{"from", row.source}, {"distances", std::move(values)}};
}

Json classify_json(const TemporalGraph& g, const ClassLabels& labels) {
  Json doc = to_json(labels);
  doc["n"] = g.vertex_count();
  doc["tau"] = g.lifetime();
  return doc;
}

Json nash_report_json(const NashReport& report) {
  Json doc{{"profile", to_json(report.profile)},
           {"is_equilibrium", report.is_equilibrium},
           {"method", to_string(report.method)},
           {"witness", nullptr}};
  if (report.witness) {
    doc["witness"] = Json{{"player", report.witness->player},
                          {"vertex", report.witness->vertex},
                          {"gain", report.witness->gain}};
  }
  return doc;
}

std::string dump(const Json& doc, bool pretty) { return doc.dump(pretty ? 2 : -1) + "\n"; }

}  // namespace tgames
