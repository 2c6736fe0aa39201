#pragma once

#include <nlohmann/json.hpp>

#include "scenopt/bounds.hpp"
#include "scenopt/scenario.hpp"
#include "scenopt/union.hpp"

namespace scenopt::cli {

nlohmann::json to_json(const ScpSolution& solution);
nlohmann::json to_json(const IntervalBound& bound);
nlohmann::json to_json(const ConfidenceReport& report);
nlohmann::json to_json(const SpSolution& solution);
nlohmann::json to_json(const UnionReport& report);

}  // namespace scenopt::cli
