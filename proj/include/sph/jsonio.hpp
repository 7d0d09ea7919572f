#pragma once

#include "sph/oracle.hpp"

#include <json.hpp>

namespace sph {

using json = nlohmann::json;

json spherical_root_to_json(const spherical_root& r);

json system_to_json(const spherical_system& sys);
spherical_system system_from_json(const json& j);

json monoid_to_json(const generator_monoid& g);
generator_monoid monoid_from_json(const json& j);

json axiom_report_to_json(const axiom_report& rep, const dynkin& d);
json colors_to_json(const std::vector<color>& cs, const dynkin& d);
json prediction_to_json(const sigma_prediction& p, const dynkin& d);
json tangent_to_json(const tangent_report& tr);
json obstruction_to_json(const obstruction_report& rep);
json cocycle_report_to_json(const cocycle_report& rep);

// parse a JSON document from a file path or "-" for standard input
json load_json(const std::string& path_or_dash);

}  // namespace sph
