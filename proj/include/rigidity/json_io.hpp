#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "rigidity/flextrace.hpp"
#include "rigidity/framework.hpp"
#include "rigidity/hendrickson.hpp"

namespace rigidity {

using nlohmann::json;

// Schemas (vertex labels 1-based, rationals as [num, den] pairs):
//   graph     {"n": int, "edges": [[i,j],...]}
//   surface   {"kind": "sphere"|"cylinder"|"cone"|"ellipsoid", "a": [n,d], "b": [n,d]}
//   framework {"surface":..., "graph":..., "config": [[x,y,z],...],
//              "rational_config": [[[nx,dx],[ny,dy],[nz,dz]],...] (optional)}
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

json surface_to_json(const Surface& s);
Surface surface_from_json(const json& j);

json framework_to_json(const Framework& fw);
Framework framework_from_json(const json& j);

json report_to_json(const RigidityReport& rep);
RigidityReport report_from_json(const json& j);

json verdict_to_json(const GlobalRigidityVerdict& v);
GlobalRigidityVerdict verdict_from_json(const json& j);

// Trajectory stream: one JSON record per accepted step
// {"t": k, "config": [[x,y,z],...], "f_e": value}, then a summary record
// {"closed": bool, "crossings": int, "witness": framework or null}.
void write_trajectory(std::ostream& os, const FlexPath& path, int crossings,
                      const std::optional<Framework>& witness);

// Reads a whole file; "-" reads stdin.
std::string slurp(const std::string& path);
json load_json(const std::string& path);

}  // namespace rigidity
