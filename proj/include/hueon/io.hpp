#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hueon/modulation.hpp"
#include "hueon/network.hpp"
#include "hueon/osnr.hpp"
#include "hueon/topology.hpp"

namespace hueon::io {

using json = nlohmann::json;

json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& value);

// Topology: {"name", "total_slots", "nodes": [...], "links": [{"a", "b",
// "distance_km", "attenuation_db_per_km": {"SSMF": x, "ULL": y}}]}
Topology topology_from_json(const json& doc);
json topology_to_json(const Topology& topology);
Topology load_topology(const std::filesystem::path& path);

// [{"link": [a, b], "fiber": "SSMF"|"ULL", "reciprocal_osnr": r}]
LinkOsnrTable link_osnr_from_json(const json& doc, const Topology& topology);
json link_osnr_to_json(const LinkOsnrTable& table, const Topology& topology);

// [{"route": [...], "fibers": [...], "osnr_db": x}]
PathOsnrLookup path_lookup_from_json(const json& doc, const Topology& topology);

PhyParams phy_params_from_json(const json& doc);  // missing keys keep defaults
json phy_params_to_json(const PhyParams& params);

// [{"id"?, "src", "dst", "bandwidth_gbps"}]; ids default to list position
std::vector<Demand> demands_from_json(const json& doc, const Topology& topology);
json demands_to_json(const std::vector<Demand>& demands, const Topology& topology);

json assignment_to_json(const LightpathAssignment& a, const Topology& topology);
LightpathAssignment assignment_from_json(const json& doc, const Topology& topology, const ModulationTable& table);

/// Full assignment dump: {"schema": "hueon-assignments/1", "topology": name,
/// "total_slots", "config": {...}, "demands": [...], "assignments": [...]}
json assignment_dump(const Topology& topology, const std::vector<Demand>& demands,
                     const std::vector<LightpathAssignment>& assignments, const json& config);

/// A problem instance: topology plus demands and optional OSNR inputs.
///
/// {"topology": path | inline, "demands": [...], "link_osnr": path | inline,
///  "path_osnr": path | inline, "phy": {...}}. Relative paths resolve against
/// the instance file's directory.
struct Instance {
  Topology topology;
  std::vector<Demand> demands;
  std::optional<LinkOsnrTable> link_osnr;
  std::optional<PathOsnrLookup> path_osnr;
  PhyParams phy;

  /// Path lookup when present, else the link table (or the default model).
  OsnrProvider osnr_provider() const;
  LinkOsnrTable resolved_link_osnr() const;
};

Instance load_instance(const std::filesystem::path& path);

}  // namespace hueon::io
