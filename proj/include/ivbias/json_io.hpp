#pragma once

#include <string>

#include <json.hpp>

#include "ivbias/bounds.hpp"
#include "ivbias/estimands.hpp"
#include "ivbias/scenario.hpp"
#include "ivbias/study.hpp"

namespace ivbias {

// field names mirror the struct members; unknown keys are ignored on input

nlohmann::json to_json(const Scenario& s);
Scenario scenario_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CalibrationSpec& c);
CalibrationSpec calibration_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GridSpec& g);
GridSpec grid_from_json(const nlohmann::json& j);

// law serializes as {"p": [[[...]]]} nested [y][x][g]
nlohmann::json to_json(const ObservationalLaw& law);
ObservationalLaw law_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CausalTargets& t);
nlohmann::json to_json(const JointMoments& m);
nlohmann::json to_json(const EstimandSet& e);
nlohmann::json to_json(const BoundInterval& b);
nlohmann::json to_json(const InequalityReport& r);
nlohmann::json to_json(const BiasRow& row);

// dotted-key override, e.g. "alpha3=2" or "targets.px1=0.5"; the value is
// parsed as JSON when possible, kept as a string otherwise; last writer wins
void apply_override(nlohmann::json& config, const std::string& dotted_key, const std::string& value);

nlohmann::json load_json_file(const std::string& path);

}
