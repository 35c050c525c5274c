#include "hueon/io.hpp"

#include <fstream>

#include "hueon/errors.hpp"

namespace hueon::io {

namespace {

std::string node_ref(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw ConfigError("node reference must be a string or integer: " + value.dump());
}

template <typename T>
T required(const json& obj, const char* key) {
  if (!obj.contains(key)) throw ConfigError(std::string("missing key '") + key + "' in " + obj.dump());
  return obj.at(key).get<T>();
}

LinkId link_by_pair(const Topology& topology, const json& pair) {
  if (!pair.is_array() || pair.size() != 2) throw ConfigError("link reference must be [a, b]");
  const NodeId a = topology.node(node_ref(pair[0]));
  const NodeId b = topology.node(node_ref(pair[1]));
  if (auto l = topology.find_link(a, b)) return *l;
  throw ConfigError("no link " + node_ref(pair[0]) + "-" + node_ref(pair[1]));
}

std::vector<NodeId> route_from_json(const json& doc, const Topology& topology) {
  std::vector<NodeId> route;
  for (const auto& n : doc) route.push_back(topology.node(node_ref(n)));
  return route;
}

std::vector<FiberKind> fibers_from_json(const json& doc) {
  std::vector<FiberKind> fibers;
  for (const auto& f : doc) fibers.push_back(parse_fiber_kind(f.get<std::string>()));
  return fibers;
}

json resolve(const json& value, const std::filesystem::path& base) {
  if (value.is_string()) return read_json(base / value.get<std::string>());
  return value;
}

}  // namespace

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const json& value) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << value.dump(2) << '\n';
}

Topology topology_from_json(const json& doc) {
  try {
    Topology topology(doc.value("total_slots", kDefaultTotalSlots));
    topology.name = doc.value("name", std::string{});
    for (const auto& n : required<json>(doc, "nodes")) topology.add_node(node_ref(n));
    for (const auto& l : required<json>(doc, "links")) {
      AttenuationOverride att;
      if (l.contains("attenuation_db_per_km")) {
        const auto& a = l.at("attenuation_db_per_km");
        if (a.contains("SSMF")) att.ssmf = a.at("SSMF").get<double>();
        if (a.contains("ULL")) att.ull = a.at("ULL").get<double>();
      }
      topology.add_link(node_ref(required<json>(l, "a")), node_ref(required<json>(l, "b")),
                        required<double>(l, "distance_km"), att);
    }
    return topology;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed topology: ") + e.what());
  }
}

json topology_to_json(const Topology& topology) {
  json doc;
  doc["name"] = topology.name;
  doc["total_slots"] = topology.total_slots();
  doc["nodes"] = json::array();
  for (NodeId n = 0; n < topology.node_count(); ++n) doc["nodes"].push_back(topology.node_name(n));
  doc["links"] = json::array();
  for (const Link& l : topology.links()) {
    json link{{"a", topology.node_name(l.a)}, {"b", topology.node_name(l.b)}, {"distance_km", l.distance_km}};
    const double s = l.fiber(FiberKind::Ssmf).attenuation_db_per_km;
    const double u = l.fiber(FiberKind::Ull).attenuation_db_per_km;
    if (s != kDefaultSsmfAttenuation || u != kDefaultUllAttenuation) {
      link["attenuation_db_per_km"] = {{"SSMF", s}, {"ULL", u}};
    }
    doc["links"].push_back(link);
  }
  return doc;
}

Topology load_topology(const std::filesystem::path& path) { return topology_from_json(read_json(path)); }

LinkOsnrTable link_osnr_from_json(const json& doc, const Topology& topology) {
  LinkOsnrTable table(topology.link_count());
  // SSMF entries first so the ULL <= SSMF check sees both values
  for (FiberKind pass : kFiberKinds) {
    for (const auto& e : doc) {
      const FiberKind kind = parse_fiber_kind(required<std::string>(e, "fiber"));
      if (kind != pass) continue;
      table.set(link_by_pair(topology, required<json>(e, "link")), kind, required<double>(e, "reciprocal_osnr"));
    }
  }
  return table;
}

json link_osnr_to_json(const LinkOsnrTable& table, const Topology& topology) {
  json doc = json::array();
  for (LinkId l = 0; l < topology.link_count(); ++l) {
    const Link& link = topology.link(l);
    for (FiberKind k : kFiberKinds) {
      if (!table.has(l, k)) continue;
      doc.push_back({{"link", {topology.node_name(link.a), topology.node_name(link.b)}},
                     {"fiber", std::string(to_string(k))},
                     {"reciprocal_osnr", table.reciprocal(l, k)}});
    }
  }
  return doc;
}

PathOsnrLookup path_lookup_from_json(const json& doc, const Topology& topology) {
  PathOsnrLookup lookup;
  for (const auto& e : doc) {
    auto route = route_from_json(required<json>(e, "route"), topology);
    topology.route_links(route);  // adjacency check
    lookup.add(std::move(route), fibers_from_json(required<json>(e, "fibers")), required<double>(e, "osnr_db"));
  }
  return lookup;
}

PhyParams phy_params_from_json(const json& doc) {
  PhyParams p;
  p.launch_power_dbm = doc.value("launch_power_dbm", p.launch_power_dbm);
  p.noise_figure_db = doc.value("noise_figure_db", p.noise_figure_db);
  p.symbol_rate_gbaud = doc.value("symbol_rate_gbaud", p.symbol_rate_gbaud);
  p.center_frequency_thz = doc.value("center_frequency_thz", p.center_frequency_thz);
  p.max_span_km = doc.value("max_span_km", p.max_span_km);
  p.validate();
  return p;
}

json phy_params_to_json(const PhyParams& p) {
  return {{"launch_power_dbm", p.launch_power_dbm},     {"noise_figure_db", p.noise_figure_db},
          {"symbol_rate_gbaud", p.symbol_rate_gbaud},   {"center_frequency_thz", p.center_frequency_thz},
          {"max_span_km", p.max_span_km}};
}

std::vector<Demand> demands_from_json(const json& doc, const Topology& topology) {
  std::vector<Demand> out;
  for (const auto& e : doc) {
    Demand d;
    d.id = e.value("id", static_cast<DemandId>(out.size()));
    d.src = topology.node(node_ref(required<json>(e, "src")));
    d.dst = topology.node(node_ref(required<json>(e, "dst")));
    d.bandwidth_gbps = required<double>(e, "bandwidth_gbps");
    if (d.src == d.dst) throw ConfigError("demand " + std::to_string(d.id) + " has identical endpoints");
    if (!(d.bandwidth_gbps > 0.0)) throw InvalidBandwidth("demand " + std::to_string(d.id) + " bandwidth <= 0");
    out.push_back(d);
  }
  return out;
}

json demands_to_json(const std::vector<Demand>& demands, const Topology& topology) {
  json doc = json::array();
  for (const Demand& d : demands) {
    doc.push_back({{"id", d.id},
                   {"src", topology.node_name(d.src)},
                   {"dst", topology.node_name(d.dst)},
                   {"bandwidth_gbps", d.bandwidth_gbps}});
  }
  return doc;
}

json assignment_to_json(const LightpathAssignment& a, const Topology& topology) {
  json route = json::array();
  for (NodeId n : a.route) route.push_back(topology.node_name(n));
  json fibers = json::array();
  for (FiberKind k : a.fibers) fibers.push_back(std::string(to_string(k)));
  return {{"demand", a.demand},         {"bandwidth_gbps", a.bandwidth_gbps}, {"route", route},
          {"fibers", fibers},           {"format", a.format.name},            {"start_slot", a.start_slot},
          {"fs_count", a.fs_count}};
}

LightpathAssignment assignment_from_json(const json& doc, const Topology& topology, const ModulationTable& table) {
  LightpathAssignment a;
  a.demand = required<DemandId>(doc, "demand");
  a.bandwidth_gbps = doc.value("bandwidth_gbps", 0.0);
  a.route = route_from_json(required<json>(doc, "route"), topology);
  // links resolved leniently: the validator reports broken adjacency itself
  for (std::size_t i = 0; i + 1 < a.route.size(); ++i) {
    auto l = topology.find_link(a.route[i], a.route[i + 1]);
    a.links.push_back(l ? *l : topology.link_count());
  }
  a.fibers = fibers_from_json(required<json>(doc, "fibers"));
  a.format = table[table.index_of(required<std::string>(doc, "format"))];
  a.start_slot = required<std::size_t>(doc, "start_slot");
  a.fs_count = required<std::size_t>(doc, "fs_count");
  return a;
}

json assignment_dump(const Topology& topology, const std::vector<Demand>& demands,
                     const std::vector<LightpathAssignment>& assignments, const json& config) {
  json doc;
  doc["schema"] = "hueon-assignments/1";
  doc["topology"] = topology.name;
  doc["total_slots"] = topology.total_slots();
  doc["config"] = config;
  doc["demands"] = demands_to_json(demands, topology);
  doc["assignments"] = json::array();
  for (const auto& a : assignments) doc["assignments"].push_back(assignment_to_json(a, topology));
  return doc;
}

OsnrProvider Instance::osnr_provider() const {
  if (path_osnr) return OsnrProvider(*path_osnr);
  return OsnrProvider(resolved_link_osnr());
}

LinkOsnrTable Instance::resolved_link_osnr() const {
  if (link_osnr) return *link_osnr;
  return LinkOsnrTable::from_model(topology, phy);
}

Instance load_instance(const std::filesystem::path& path) {
  const json doc = read_json(path);
  const auto base = path.parent_path();
  Instance inst{topology_from_json(resolve(doc.at("topology"), base)), {}, {}, {}, {}};
  if (doc.contains("total_slots")) {
    json topo = topology_to_json(inst.topology);
    topo["total_slots"] = doc.at("total_slots");
    inst.topology = topology_from_json(topo);
  }
  if (doc.contains("demands")) inst.demands = demands_from_json(resolve(doc.at("demands"), base), inst.topology);
  if (doc.contains("phy")) inst.phy = phy_params_from_json(doc.at("phy"));
  if (doc.contains("link_osnr")) inst.link_osnr = link_osnr_from_json(resolve(doc.at("link_osnr"), base), inst.topology);
  if (doc.contains("path_osnr")) {
    inst.path_osnr = path_lookup_from_json(resolve(doc.at("path_osnr"), base), inst.topology);
  }
  return inst;
}

}  // namespace hueon::io
