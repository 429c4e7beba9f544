#pragma once

#include "ssice/acceptance.hpp"
#include "ssice/dynamics.hpp"
#include "ssice/relations.hpp"

#include <json.hpp>

namespace ssice::json_io {

using Json = nlohmann::ordered_json;

std::string format_statistic(double x);  // 6 significant digits

Json to_json(const ParamPoint& p);
Json to_json(const LatticeSpec& s);
Json to_json(const Outcome& o);
Json to_json(const RelationFailure& f);
Json to_json(const RelationReport& r);
Json to_json(const SampleSummary& s);
Json to_json(const StatisticsReport& r);
Json to_json(const Trajectory& t, Model model);
Json to_json(const acceptance::CriterionResult& r);

}  // namespace ssice::json_io
