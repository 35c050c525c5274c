// Python module _core. Structured results cross the boundary as JSON text;
// the hueon package decodes them.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "hueon/cost.hpp"
#include "hueon/errors.hpp"
#include "hueon/io.hpp"
#include "hueon/milp.hpp"
#include "hueon/oracle.hpp"
#include "hueon/simulator.hpp"
#include "hueon/validator.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace hueon;

namespace {

FiberMask parse_fibers(const std::string& fibers) {
  if (fibers == "both") return {};
  if (fibers == "ssmf") return FiberMask::ssmf_only();
  if (fibers == "ull") return FiberMask::ull_only();
  throw InvalidParams("fibers must be both, ssmf or ull");
}

json metrics_json(const RunMetrics& m) {
  return {{"max_fs_used", m.max_fs_used},
          {"offered", m.offered},
          {"blocked", m.blocked},
          {"blocking_probability", m.blocking_probability},
          {"util_ssmf", m.utilization[0]},
          {"util_ull", m.utilization[1]},
          {"blocked_ids", m.blocked_ids}};
}

// Owns an instance plus the derived OSNR inputs; never moved once built so
// SimulationContext pointers stay valid.
class Network {
 public:
  explicit Network(io::Instance inst) : inst_(std::move(inst)), osnr_(inst_.osnr_provider()), link_osnr_(inst_.resolved_link_osnr()) {}
  Network(const Network&) = delete;
  Network& operator=(const Network&) = delete;

  static std::unique_ptr<Network> from_instance(const std::filesystem::path& path) {
    return std::make_unique<Network>(io::load_instance(path));
  }

  static std::unique_ptr<Network> from_files(const std::filesystem::path& topology,
                                             const std::optional<std::filesystem::path>& link_osnr,
                                             const std::optional<std::filesystem::path>& path_osnr,
                                             const std::optional<std::string>& demands_json) {
    io::Instance inst;
    inst.topology = io::load_topology(topology);
    if (link_osnr) inst.link_osnr = io::link_osnr_from_json(io::read_json(*link_osnr), inst.topology);
    if (path_osnr) inst.path_osnr = io::path_lookup_from_json(io::read_json(*path_osnr), inst.topology);
    if (demands_json) inst.demands = io::demands_from_json(json::parse(*demands_json), inst.topology);
    return std::make_unique<Network>(std::move(inst));
  }

  std::vector<std::string> nodes() const {
    std::vector<std::string> out;
    for (NodeId n = 0; n < inst_.topology.node_count(); ++n) out.push_back(inst_.topology.node_name(n));
    return out;
  }
  std::size_t link_count() const { return inst_.topology.link_count(); }
  std::size_t total_slots() const { return inst_.topology.total_slots(); }
  std::string demands() const { return io::demands_to_json(inst_.demands, inst_.topology).dump(); }

  std::string run_static(const std::string& strategy, double alpha, double x_max, std::uint64_t seed,
                         const std::string& fibers, const std::string& algorithm, bool use_instance_demands) const {
    StrategyConfig s{parse_strategy(strategy)};
    s.alpha = alpha;
    s.seed = seed;
    s.validate();
    const auto ctx = context(fibers, algorithm);
    StaticResult r;
    {
      py::gil_scoped_release release;
      r = use_instance_demands ? hueon::run_static(ctx, inst_.demands, s)
                               : hueon::run_static(ctx, TrafficConfig{StaticTraffic{x_max}, seed}, s);
    }
    json out = metrics_json(r.metrics);
    out["dump"] = io::assignment_dump(inst_.topology, r.demands, r.assignments,
                                      {{"strategy", strategy}, {"alpha", alpha}, {"seed", seed}});
    return out.dump();
  }

  std::string run_dynamic(const std::string& strategy, double load, std::uint64_t seed, double x_max,
                          double holding, std::size_t events, std::optional<std::size_t> warmup,
                          const std::string& fibers, const std::string& algorithm) const {
    StrategyConfig s{parse_strategy(strategy)};
    s.seed = seed;
    s.validate();
    DynamicTraffic d;
    d.load_erlang = load;
    d.x_max_gbps = x_max;
    d.mean_holding = holding;
    d.horizon_events = events;
    d.warmup_events = warmup;
    const auto ctx = context(fibers, algorithm);
    py::gil_scoped_release release;
    return metrics_json(hueon::run_dynamic(ctx, TrafficConfig{d, seed}, s)).dump();
  }

  std::string oracle(const std::string& fibers) const {
    const auto r = brute_force_opt(inst_.topology, inst_.demands, table_, osnr_, parse_fibers(fibers));
    return json{{"feasible", r.feasible},
                {"optimum", r.optimum},
                {"nodes_explored", r.nodes_explored},
                {"dump", io::assignment_dump(inst_.topology, inst_.demands, r.witness, json::object())}}
        .dump();
  }

  std::string to_lp() const { return milp::build(milp_instance()).to_lp(); }
  void export_lp(const std::filesystem::path& stem) const { milp::export_lp(milp_instance(), stem); }

  std::vector<std::pair<std::string, std::string>> validate(const std::string& dump_text) const {
    const json dump = json::parse(dump_text);
    const auto demands = io::demands_from_json(dump.at("demands"), inst_.topology);
    std::vector<LightpathAssignment> assignments;
    for (const auto& a : dump.at("assignments")) assignments.push_back(io::assignment_from_json(a, inst_.topology, table_));
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& v : check_assignments(inst_.topology, assignments, table_, &osnr_, demands)) {
      out.emplace_back(std::string(to_string(v.kind)), v.message);
    }
    return out;
  }

 private:
  SimulationContext context(const std::string& fibers, const std::string& algorithm) const {
    return {&inst_.topology, &table_, &osnr_, &link_osnr_, parse_fibers(fibers), parse_algorithm(algorithm)};
  }

  milp::Instance milp_instance() const {
    milp::Instance m;
    m.topology = &inst_.topology;
    m.demands = inst_.demands;
    m.link_osnr = link_osnr_;
    return m;
  }

  io::Instance inst_;
  ModulationTable table_ = ModulationTable::standard();
  OsnrProvider osnr_;
  LinkOsnrTable link_osnr_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lightpath provisioning in hybrid SSMF/ULL elastic optical networks";

  py::register_exception<Error>(m, "HueonError", PyExc_ValueError);

  py::class_<Network>(m, "Network")
      .def_static("from_instance", &Network::from_instance, py::arg("path"))
      .def_static("from_files", &Network::from_files, py::arg("topology"), py::arg("link_osnr") = py::none(),
                  py::arg("path_osnr") = py::none(), py::arg("demands_json") = py::none())
      .def_property_readonly("nodes", &Network::nodes)
      .def_property_readonly("link_count", &Network::link_count)
      .def_property_readonly("total_slots", &Network::total_slots)
      .def("demands_json", &Network::demands)
      .def("run_static_json", &Network::run_static, py::arg("strategy"), py::arg("alpha"), py::arg("x_max"),
           py::arg("seed"), py::arg("fibers"), py::arg("algorithm"), py::arg("use_instance_demands"))
      .def("run_dynamic_json", &Network::run_dynamic, py::arg("strategy"), py::arg("load"), py::arg("seed"),
           py::arg("x_max"), py::arg("holding"), py::arg("events"), py::arg("warmup"), py::arg("fibers"),
           py::arg("algorithm"))
      .def("oracle_json", &Network::oracle, py::arg("fibers") = "both")
      .def("to_lp", &Network::to_lp)
      .def("export_lp", &Network::export_lp, py::arg("stem"))
      .def("validate_json", &Network::validate, py::arg("dump"));

  m.def(
      "deployment_cost",
      [](const std::filesystem::path& topology, const std::string& scenario, double ssmf_per_km, double ull_per_km) {
        const CostModel model{ssmf_per_km, ull_per_km};
        model.validate();
        return hueon::deployment_cost(io::load_topology(topology), parse_scenario(scenario), model);
      },
      py::arg("topology"), py::arg("scenario"), py::arg("ssmf_per_km") = 1.0, py::arg("ull_per_km") = 10.0);
}
