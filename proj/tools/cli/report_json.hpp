#pragma once

#include <json.hpp>

#include "balancegate/analyzer.hpp"

namespace balancegate::cli {

/// Exact integers and rationals are encoded as decimal strings.
nlohmann::json report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const nlohmann::json& doc);

nlohmann::json finding_to_json(const RuleFinding& finding);

}  // namespace balancegate::cli
