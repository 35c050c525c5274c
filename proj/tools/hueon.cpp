// hueon: command line front end for the provisioning library.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hueon/cost.hpp"
#include "hueon/errors.hpp"
#include "hueon/io.hpp"
#include "hueon/milp.hpp"
#include "hueon/oracle.hpp"
#include "hueon/simulator.hpp"
#include "hueon/validator.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace hueon;

namespace {

constexpr const char* kCsvVersion = "# hueon-csv v1";

// Reads {"flag": value, "<subcommand>": {"flag": value}} into CLI11 items.
// Top-level flags go to every subcommand that defines them.
class JsonConfig : public CLI::Config {
 public:
  explicit JsonConfig(const CLI::App* app) : app_(app) {}

  std::string to_config(const CLI::App*, bool, bool, std::string) const override { return "{}"; }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    json doc;
    try {
      input >> doc;
    } catch (const json::exception& e) {
      throw CLI::ConversionError(std::string("config is not valid JSON: ") + e.what());
    }
    std::vector<CLI::ConfigItem> items;
    flatten(doc, {}, items);
    std::vector<CLI::ConfigItem> out;
    for (auto& item : items) {
      if (!item.parents.empty()) {
        out.push_back(std::move(item));
        continue;
      }
      for (const CLI::App* sub : app_->get_subcommands({})) {
        if (sub->get_option_no_throw("--" + item.name) == nullptr) continue;
        CLI::ConfigItem copy = item;
        copy.parents = {sub->get_name()};
        out.push_back(std::move(copy));
      }
    }
    return out;
  }

 private:
  const CLI::App* app_;

  static void flatten(const json& j, const std::vector<std::string>& parents, std::vector<CLI::ConfigItem>& out) {
    if (!j.is_object()) throw CLI::ConversionError("config sections must be JSON objects");
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        auto p = parents;
        p.push_back(key);
        flatten(value, p, out);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        for (const auto& v : value) item.inputs.push_back(scalar(v));
      } else if (value.is_boolean()) {
        item.inputs = {value.get<bool>() ? "true" : "false"};
      } else {
        item.inputs = {scalar(value)};
      }
      out.push_back(std::move(item));
    }
  }

  static std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }
};

// Inputs shared by the simulation subcommands.
struct NetworkArgs {
  std::string topology;
  std::string instance;
  std::string link_osnr;
  std::string path_osnr;
  std::string phy;
  std::string fibers = "both";
  std::string algorithm = "swp";

  void add(CLI::App* app) {
    auto* t = app->add_option("--topology", topology, "topology JSON");
    auto* i = app->add_option("--instance", instance, "instance JSON (topology, demands, OSNR inputs)");
    t->excludes(i);
    app->add_option("--link-osnr", link_osnr, "per-link reciprocal OSNR table JSON");
    app->add_option("--path-osnr", path_osnr, "literal path OSNR lookup JSON");
    app->add_option("--phy", phy, "physical layer parameters JSON for the default model");
    app->add_option("--fibers", fibers, "usable fibers")->check(CLI::IsMember({"both", "ssmf", "ull"}));
    app->add_option("--algorithm", algorithm, "route search")->check(CLI::IsMember({"swp", "sp"}));
  }

  json echo() const {
    json j{{"fibers", fibers}, {"algorithm", algorithm}};
    for (const auto& [k, v] : {std::pair{"topology", &topology}, {"instance", &instance}, {"link-osnr", &link_osnr},
                               {"path-osnr", &path_osnr}, {"phy", &phy}}) {
      if (!v->empty()) j[k] = fs::absolute(*v).string();
    }
    return j;
  }
};

// Loaded network with everything a simulation context points to.
struct Network {
  io::Instance inst;
  ModulationTable table = ModulationTable::standard();
  std::optional<OsnrProvider> osnr;
  LinkOsnrTable link_osnr;
  FiberMask mask;
  Algorithm algorithm = Algorithm::Swp;

  SimulationContext context() const { return {&inst.topology, &table, &*osnr, &link_osnr, mask, algorithm}; }
};

void load_network(const NetworkArgs& a, Network& net) {
  if (!a.instance.empty()) {
    net.inst = io::load_instance(a.instance);
  } else if (!a.topology.empty()) {
    net.inst.topology = io::load_topology(a.topology);
  } else {
    throw ConfigError("--topology or --instance is required");
  }
  if (!a.phy.empty()) net.inst.phy = io::phy_params_from_json(io::read_json(a.phy));
  if (!a.link_osnr.empty()) net.inst.link_osnr = io::link_osnr_from_json(io::read_json(a.link_osnr), net.inst.topology);
  if (!a.path_osnr.empty()) {
    net.inst.path_osnr = io::path_lookup_from_json(io::read_json(a.path_osnr), net.inst.topology);
  }
  net.osnr.emplace(net.inst.osnr_provider());
  net.link_osnr = net.inst.resolved_link_osnr();
  net.mask = a.fibers == "ssmf" ? FiberMask::ssmf_only() : a.fibers == "ull" ? FiberMask::ull_only() : FiberMask{};
  net.algorithm = parse_algorithm(a.algorithm);
}

fs::path out_dir(const std::string& flag) {
  fs::path dir = flag;
  if (dir.empty()) {
    const char* env = std::getenv("HUEON_OUT_DIR");
    dir = env != nullptr && *env != '\0' ? fs::path(env) : fs::path(".");
  }
  fs::create_directories(dir);
  return dir;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << text;
}

// Writes the CSV to <dir>/<name>.csv and echoes it on stdout.
void emit_csv(const fs::path& dir, const std::string& name, const std::string& body) {
  write_text(dir / (name + ".csv"), body);
  std::cout << body;
}

void emit_echo(const fs::path& dir, const std::string& name, const std::string& subcommand, const json& args) {
  io::write_json(dir / (name + ".config.json"), json{{subcommand, args}});
}

const char* kRunColumns =
    "kind,strategy,algorithm,alpha,x_max_gbps,load_erlang,seed,max_fs_used,offered,blocked,blocking_probability,"
    "util_ssmf,util_ull\n";

std::string run_row(const char* kind, StrategyKind strategy, Algorithm algorithm, std::optional<double> alpha,
                    double x_max, std::optional<double> load, std::uint64_t seed, const RunMetrics& m) {
  std::ostringstream row;
  row.precision(10);
  row << kind << ',' << to_string(strategy) << ',' << to_string(algorithm) << ',';
  if (alpha) row << *alpha;
  row << ',' << x_max << ',';
  if (load) row << *load;
  row << ',' << seed << ',' << m.max_fs_used << ',' << m.offered << ',' << m.blocked << ','
      << m.blocking_probability << ',' << m.utilization[0] << ',' << m.utilization[1] << '\n';
  return row.str();
}

StrategyConfig strategy_config(const std::string& name, double alpha, std::uint64_t seed) {
  StrategyConfig s{parse_strategy(name)};
  s.alpha = alpha;
  s.seed = seed;
  s.validate();
  return s;
}

// ---------------------------------------------------------------------------

struct StaticArgs {
  NetworkArgs net;
  std::string strategy = "oa";
  double alpha = 1.12;
  double x_max = 200;
  std::vector<std::uint64_t> seeds{1};
  std::string out;

  json echo() const {
    json j = net.echo();
    j.update({{"strategy", strategy}, {"alpha", alpha}, {"x-max", x_max}, {"seed", seeds}});
    return j;
  }
};

int cmd_static(const StaticArgs& a) {
  Network net;
  load_network(a.net, net);
  const auto ctx = net.context();
  const auto dir = out_dir(a.out);
  std::string csv = std::string(kCsvVersion) + " static\n" + kRunColumns;
  json dumps = json::array();
  for (std::uint64_t seed : a.seeds) {
    const auto strategy = strategy_config(a.strategy, a.alpha, seed);
    StaticResult r;
    if (!net.inst.demands.empty()) {
      r = run_static(ctx, net.inst.demands, strategy);
    } else {
      r = run_static(ctx, TrafficConfig{StaticTraffic{a.x_max}, seed}, strategy);
    }
    const std::optional<double> alpha =
        strategy.kind == StrategyKind::Oa ? std::optional<double>(a.alpha) : std::nullopt;
    csv += run_row("static", strategy.kind, net.algorithm, alpha, a.x_max, std::nullopt, seed, r.metrics);
    json cfg = a.echo();
    cfg["seed"] = seed;
    dumps.push_back(io::assignment_dump(net.inst.topology, r.demands, r.assignments, cfg));
  }
  emit_csv(dir, "static", csv);
  io::write_json(dir / "static.assignments.json", a.seeds.size() == 1 ? dumps[0] : dumps);
  emit_echo(dir, "static", "static", a.echo());
  return 0;
}

struct DynamicArgs {
  NetworkArgs net;
  std::string strategy = "su";
  std::vector<double> loads{30, 36, 42};
  std::vector<std::uint64_t> seeds{1};
  double x_max = DynamicTraffic{}.x_max_gbps;
  double holding = 1.0;
  std::size_t events = 10000;
  std::optional<std::size_t> warmup;
  unsigned threads = 0;
  std::string out;

  json echo() const {
    json j = net.echo();
    j.update({{"strategy", strategy}, {"load", loads}, {"seed", seeds}, {"x-max", x_max}, {"holding", holding},
              {"events", events}, {"threads", threads}});
    if (warmup) j["warmup"] = *warmup;
    return j;
  }
};

int cmd_dynamic(const DynamicArgs& a) {
  Network net;
  load_network(a.net, net);
  const auto ctx = net.context();
  const auto dir = out_dir(a.out);
  struct Point {
    double load;
    std::uint64_t seed;
    RunMetrics m;
  };
  std::vector<Point> points;
  for (double load : a.loads) {
    for (std::uint64_t seed : a.seeds) points.push_back({load, seed, {}});
  }
  const auto kind = parse_strategy(a.strategy);
  parallel_for(
      points.size(),
      [&](std::size_t i) {
        DynamicTraffic d;
        d.load_erlang = points[i].load;
        d.x_max_gbps = a.x_max;
        d.mean_holding = a.holding;
        d.horizon_events = a.events;
        d.warmup_events = a.warmup;
        points[i].m = run_dynamic(ctx, TrafficConfig{d, points[i].seed}, strategy_config(a.strategy, 1.12, points[i].seed));
      },
      a.threads);
  std::string csv = std::string(kCsvVersion) + " dynamic\n" + kRunColumns;
  for (const auto& p : points) csv += run_row("dynamic", kind, net.algorithm, std::nullopt, a.x_max, p.load, p.seed, p.m);
  emit_csv(dir, "dynamic", csv);
  emit_echo(dir, "dynamic", "dynamic", a.echo());
  return 0;
}

struct SweepArgs {
  NetworkArgs net;
  std::vector<double> alphas{1.10, 1.11, 1.12, 1.13, 1.14};
  std::vector<double> x_values{200, 300};
  std::vector<std::uint64_t> seeds{1};
  unsigned threads = 0;
  std::string out;

  json echo() const {
    json j = net.echo();
    j.update({{"alpha", alphas}, {"x-max", x_values}, {"seed", seeds}, {"threads", threads}});
    return j;
  }
};

int cmd_sweep(const SweepArgs& a) {
  Network net;
  load_network(a.net, net);
  const auto dir = out_dir(a.out);
  const auto rows = sweep_alpha(net.context(), a.x_values, a.alphas, a.seeds, a.threads);
  std::string csv = std::string(kCsvVersion) + " sweep-alpha\n" + kRunColumns;
  for (const auto& r : rows) {
    RunMetrics m;
    m.max_fs_used = r.max_fs_used;
    m.blocked = r.blocked;
    m.offered = net.inst.topology.node_count() * (net.inst.topology.node_count() - 1);
    m.blocking_probability = m.offered ? static_cast<double>(r.blocked) / static_cast<double>(m.offered) : 0.0;
    csv += run_row("sweep-alpha", StrategyKind::Oa, net.algorithm, r.alpha, r.x_max_gbps, std::nullopt, r.seed, m);
  }
  emit_csv(dir, "sweep_alpha", csv);
  emit_echo(dir, "sweep_alpha", "sweep-alpha", a.echo());
  return 0;
}

struct CostArgs {
  std::string topology;
  std::vector<std::string> scenarios{"S", "SS", "US", "UU"};
  double ssmf_cost = 1.0;
  double ull_cost = 10.0;
  std::string out;
};

int cmd_cost(const CostArgs& a) {
  const auto topo = io::load_topology(a.topology);
  const CostModel model{a.ssmf_cost, a.ull_cost};
  model.validate();
  const auto dir = out_dir(a.out);
  std::ostringstream csv;
  csv.precision(12);
  csv << kCsvVersion << " cost\nscenario,new_ssmf,new_ull,total_km,cost\n";
  double km = 0.0;
  for (LinkId l = 0; l < topo.link_count(); ++l) km += topo.link(l).distance_km;
  for (const auto& name : a.scenarios) {
    const auto s = parse_scenario(name);
    const auto c = deployment_counts(s);
    csv << to_string(s) << ',' << c.ssmf << ',' << c.ull << ',' << km << ',' << deployment_cost(topo, s, model)
        << '\n';
  }
  emit_csv(dir, "cost", csv.str());
  emit_echo(dir, "cost", "cost",
            json{{"topology", fs::absolute(a.topology).string()}, {"scenario", a.scenarios},
                 {"ssmf-cost", a.ssmf_cost}, {"ull-cost", a.ull_cost}});
  return 0;
}

milp::Instance milp_instance(const io::Instance& inst) {
  milp::Instance m;
  m.topology = &inst.topology;
  m.demands = inst.demands;
  m.link_osnr = inst.resolved_link_osnr();
  return m;
}

int cmd_export(const std::string& instance, const std::string& stem_flag, const std::string& out) {
  const auto inst = io::load_instance(instance);
  fs::path stem = stem_flag.empty() ? out_dir(out) / fs::path(instance).stem() : fs::path(stem_flag);
  if (stem.has_parent_path()) fs::create_directories(stem.parent_path());
  milp::export_lp(milp_instance(inst), stem);
  std::cout << stem.string() << ".lp\n" << stem.string() << ".names.json\n";
  return 0;
}

int cmd_oracle(const std::string& instance, const std::string& fibers, const std::string& out) {
  const auto inst = io::load_instance(instance);
  const auto osnr = inst.osnr_provider();
  const FiberMask mask =
      fibers == "ssmf" ? FiberMask::ssmf_only() : fibers == "ull" ? FiberMask::ull_only() : FiberMask{};
  const auto table = ModulationTable::standard();
  const auto r = brute_force_opt(inst.topology, inst.demands, table, osnr, mask);
  const auto dir = out_dir(out);
  json cfg{{"instance", fs::absolute(instance).string()}, {"fibers", fibers}};
  io::write_json(dir / "oracle.assignments.json", io::assignment_dump(inst.topology, inst.demands, r.witness, cfg));
  emit_echo(dir, "oracle", "oracle", cfg);
  if (!r.feasible) {
    std::cout << "infeasible\n";
    return 2;
  }
  std::cout << "optimum " << r.optimum << " (" << r.nodes_explored << " search nodes)\n";
  return 0;
}

int cmd_validate(const NetworkArgs& net_args, const std::string& dump_path) {
  Network net;
  load_network(net_args, net);
  const json dump = io::read_json(dump_path);
  const json* doc = &dump;
  if (dump.is_array()) {
    if (dump.size() != 1) throw ConfigError("validate expects a single assignment dump");
    doc = &dump[0];
  }
  const auto& topo = net.inst.topology;
  if (doc->contains("total_slots") && doc->at("total_slots").get<std::size_t>() != topo.total_slots()) {
    throw ConfigError("dump was made for a different slot count");
  }
  const auto demands = io::demands_from_json(doc->at("demands"), topo);
  std::vector<LightpathAssignment> assignments;
  for (const auto& a : doc->at("assignments")) assignments.push_back(io::assignment_from_json(a, topo, net.table));
  const auto violations = check_assignments(topo, assignments, net.table, &*net.osnr, demands);
  for (const auto& v : violations) std::cout << to_string(v.kind) << ": " << v.message << '\n';
  std::cout << assignments.size() << " assignments, " << violations.size() << " violations\n";
  return violations.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lightpath provisioning in hybrid SSMF/ULL elastic optical networks", "hueon"};
  app.config_formatter(std::make_shared<JsonConfig>(&app));
  app.set_config("--config", "", "JSON config; keys are flag names, optionally nested under the subcommand");
  app.require_subcommand(1);

  StaticArgs st;
  auto* s = app.add_subcommand("static", "provision one demand per node pair");
  st.net.add(s);
  s->add_option("--strategy", st.strategy, "random, uff or oa");
  s->add_option("--alpha", st.alpha, "OA threshold on r(SSMF)/r(ULL)");
  s->add_option("--x-max", st.x_max, "largest demand in Gb/s");
  s->add_option("--seed", st.seeds, "one or more seeds");
  s->add_option("--out-dir", st.out, "output directory (default $HUEON_OUT_DIR or .)");

  DynamicArgs dy;
  auto* d = app.add_subcommand("dynamic", "Poisson arrivals and departures, blocking per load");
  dy.net.add(d);
  d->add_option("--strategy", dy.strategy, "random, uff or su");
  d->add_option("--load", dy.loads, "Erlang per node pair, one or more");
  d->add_option("--seed", dy.seeds, "one or more seeds");
  d->add_option("--x-max", dy.x_max, "largest request in Gb/s");
  d->add_option("--holding", dy.holding, "mean holding time");
  d->add_option("--events", dy.events, "arrivals per run");
  d->add_option("--warmup", dy.warmup, "arrivals discarded before measuring (default 10%)");
  d->add_option("--threads", dy.threads, "worker threads (0: all cores)");
  d->add_option("--out-dir", dy.out, "output directory");

  SweepArgs sw;
  auto* w = app.add_subcommand("sweep-alpha", "OA max slot count over an alpha grid");
  sw.net.add(w);
  w->add_option("--alpha", sw.alphas, "alpha grid");
  w->add_option("--x-max", sw.x_values, "largest demand values");
  w->add_option("--seed", sw.seeds, "seeds");
  w->add_option("--threads", sw.threads, "worker threads (0: all cores)");
  w->add_option("--out-dir", sw.out, "output directory");

  CostArgs co;
  auto* c = app.add_subcommand("cost", "fiber deployment cost per scenario");
  c->add_option("--topology", co.topology, "topology JSON")->required();
  c->add_option("--scenario", co.scenarios, "S, SS, US, UU");
  c->add_option("--ssmf-cost", co.ssmf_cost, "SSMF cost per km");
  c->add_option("--ull-cost", co.ull_cost, "ULL cost per km");
  c->add_option("--out-dir", co.out, "output directory");

  std::string mi_instance, mi_stem, mi_out;
  auto* e = app.add_subcommand("export-milp", "write the MILP as CPLEX LP plus a names sidecar");
  e->add_option("--instance", mi_instance, "instance JSON")->required();
  e->add_option("--stem", mi_stem, "output path without extension");
  e->add_option("--out-dir", mi_out, "output directory when --stem is not given");

  std::string or_instance, or_fibers = "both", or_out;
  auto* o = app.add_subcommand("oracle", "exact optimum of a tiny instance by exhaustive search");
  o->add_option("--instance", or_instance, "instance JSON")->required();
  o->add_option("--fibers", or_fibers, "usable fibers")->check(CLI::IsMember({"both", "ssmf", "ull"}));
  o->add_option("--out-dir", or_out, "output directory");

  NetworkArgs va;
  std::string va_dump;
  auto* v = app.add_subcommand("validate", "re-check an assignment dump against every constraint");
  va.add(v);
  v->add_option("--dump", va_dump, "assignment dump JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (s->parsed()) return cmd_static(st);
    if (d->parsed()) return cmd_dynamic(dy);
    if (w->parsed()) return cmd_sweep(sw);
    if (c->parsed()) return cmd_cost(co);
    if (e->parsed()) return cmd_export(mi_instance, mi_stem, mi_out);
    if (o->parsed()) return cmd_oracle(or_instance, or_fibers, or_out);
    if (v->parsed()) return cmd_validate(va, va_dump);
  } catch (const Error& ex) {
    std::cerr << "hueon: " << ex.what() << '\n';
    return 3;
  } catch (const nlohmann::json::exception& ex) {
    std::cerr << "hueon: bad input: " << ex.what() << '\n';
    return 3;
  } catch (const std::filesystem::filesystem_error& ex) {
    std::cerr << "hueon: " << ex.what() << '\n';
    return 3;
  }
  return 0;
}
