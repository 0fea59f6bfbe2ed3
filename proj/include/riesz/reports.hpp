#pragma once

#include <json.hpp>

#include "riesz/asymptotics.hpp"
#include "riesz/discrepancy.hpp"
#include "riesz/energy.hpp"
#include "riesz/optimizer.hpp"
#include "riesz/special_functions.hpp"

// JSON encodings of the report types. Field names follow the struct members;
// absent optionals are written as null.

namespace riesz {

void to_json(nlohmann::json& j, const EnergyReport& r);
void to_json(nlohmann::json& j, const DiscrepancyReport& r);
void to_json(nlohmann::json& j, const LeVequeFunctionals& r);
void to_json(nlohmann::json& j, const OptimizerConfig& c);
/// Everything except the point set itself, which is written separately.
void to_json(nlohmann::json& j, const OptimizerResult& r);

namespace asymptotics {
void to_json(nlohmann::json& j, const FitResult& r);
void to_json(nlohmann::json& j, const AsymptoticPrediction& p);
}  // namespace asymptotics

namespace special {
void to_json(nlohmann::json& j, const LatticeSum& r);
}  // namespace special

}  // namespace riesz
