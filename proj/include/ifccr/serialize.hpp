#pragma once

#include <json.hpp>

#include "ifccr/oracle.hpp"

namespace ifccr {

using nlohmann::json;

json params_to_json(const ChannelParams& p);
ChannelParams params_from_json(const json& j);

/// {"params": {...}, "inequalities": [{"a":..,"b":..,"c":..}, ...],
///  "vertices": [["p/q","p/q"], ...]} — rationals as strings.
json region_to_json(const RateRegion& r, const ChannelParams* p = nullptr);
RateRegion region_from_json(const json& j);

/// {"k1":int,"k2":int,"A1":[rows],"A2":...,"Ac1":...,"Ac2":...} with rows as
/// '0'/'1' strings.
json scheme_to_json(const LinearScheme& s);
LinearScheme scheme_from_json(const json& j);

json report_to_json(const DecodabilityReport& r);
json oracle_to_json(const OracleResult& r);
json gap_to_json(const GapReport& g);
json simulation_to_json(const SimulationReport& r);

/// Fixed 600x600 viewBox region plot: axes with integer ticks, the region as
/// a filled polygon, corners labelled with coordinates. The only place floats
/// appear; values formatted to 3 decimals.
std::string region_to_svg(const RateRegion& r, const std::string& title = "");

}  // namespace ifccr
