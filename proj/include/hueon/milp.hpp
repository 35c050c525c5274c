#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "hueon/modulation.hpp"
#include "hueon/network.hpp"
#include "hueon/osnr.hpp"
#include "hueon/topology.hpp"

namespace hueon::milp {

/// Constraint families of the formulation. Per demand d, link l, format m,
/// node n and ordered demand pair (a, b).
enum class Family {
  SourceDegree,     // one route link touches the source          [d]
  SinkDegree,       // one route link touches the destination     [d]
  TransitDegree,    // 0 or 2 route links at every other node      [d, n]
  UllOnRoute,       // Z <= gamma                                  [d, l]
  SsmfOnRoute,      // E <= gamma                                  [d, l]
  FiberExclusive,   // E <= 1 - Z                                  [d, l]
  FiberCovers,      // E >= gamma - Z                              [d, l]
  OneFormat,        // sum_m delta = 1                             [d]
  OsnrGate,         // O <= M gamma                                [d, l]
  OsnrUpper,        // O <= Z rU + E rS                            [d, l]
  OsnrLower,        // O >= Z rU + E rS - M (1 - gamma)            [d, l]
  PathOsnr,         // OSNR_rec = sum_l O                          [d]
  FormatThreshold,  // OSNR_rec - rec_m <= M (1 - delta)           [d, m]
  SlotCount,        // F = sum_m delta f_m                         [d]
  ShareUll,         // theta >= Z_a + Z_b - 1                      [a, b, l]
  ShareSsmf,        // theta >= E_a + E_b - 1                      [a, b, l]
  OrderStart,       // S_b - S_a <= M (2 - X - theta) - 1          [a, b]
  OrderEnd,         // S_a + F_a - S_b <= M (X + 1 - theta)        [a, b]
  UllDemandEnd,     // xi >= S + F - beta (1 - Z)                  [d, l]
  UllRouteGate,     // sigma <= M gamma                            [d, l]
  UllRouteUpper,    // sigma <= xi                                 [d, l]
  UllRouteLower,    // sigma >= xi - M (1 - gamma)                 [d, l]
  UllLinkMax,       // phi_U >= sigma                              [d, l]
  SsmfDemandEnd,    // zeta >= S + F - beta (1 - E)                [d, l]
  SsmfRouteGate,    // tau <= M gamma                              [d, l]
  SsmfRouteUpper,   // tau <= zeta                                 [d, l]
  SsmfRouteLower,   // tau >= zeta - M (1 - gamma)                 [d, l]
  SsmfLinkMax,      // phi_S >= tau                                [d, l]
  LinkMaxUll,       // eta >= phi_U                                [l]
  LinkMaxSsmf,      // eta >= phi_S                                [l]
  NetworkMax,       // C >= eta                                    [l]
  WindowBound,      // S + F <= beta (added strengthening)         [d]
};

inline constexpr std::size_t kFamilyCount = static_cast<std::size_t>(Family::WindowBound) + 1;

/// Short tag used as the constraint name prefix, e.g. "src" or "ord_end".
std::string_view tag(Family family);

enum class VarType { Binary, Integer, Continuous };

struct Variable {
  std::string name;
  VarType type = VarType::Continuous;
  double lower = 0.0;
  double upper = 0.0;
  std::string meaning;
};

enum class Sense { Le, Ge, Eq };

struct Term {
  std::size_t var;
  double coef;
};

struct Constraint {
  std::string name;
  Family family = Family::SourceDegree;
  std::vector<Term> terms;
  Sense sense = Sense::Le;
  double rhs = 0.0;

  double lhs(std::span<const double> values) const;
  /// Amount by which `values` violate the constraint (0 when satisfied).
  double violation(std::span<const double> values) const;
};

/// A linear model in "minimize one variable" form.
class Model {
 public:
  std::size_t add_var(std::string name, VarType type, double lower, double upper, std::string meaning = {});
  std::size_t add_constraint(std::string name, Family family, std::vector<Term> terms, Sense sense, double rhs);

  std::size_t var(const std::string& name) const;  // throws InvalidParams
  std::optional<std::size_t> find_var(const std::string& name) const;
  const std::vector<Variable>& variables() const { return vars_; }
  const std::vector<Constraint>& constraints() const { return cons_; }

  void set_objective(std::size_t var) { objective_ = var; }
  std::size_t objective() const { return objective_; }

  std::size_t family_count(Family family) const;

  /// Names of constraints violated by more than `tol`, and of variables
  /// outside their bounds or off integrality.
  std::vector<std::string> check(std::span<const double> values, double tol = 1e-9) const;

  /// CPLEX LP text.
  std::string to_lp() const;

 private:
  std::vector<Variable> vars_;
  std::vector<Constraint> cons_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t objective_ = 0;
};

struct BigM {
  double spectrum = 0.0;  // route and spectrum families: beta + max f
  double osnr = 0.0;      // OSNR families: 2 * sum over links of max reciprocal
};

/// Input of the formulation. All demands need distinct endpoints.
struct Instance {
  const Topology* topology = nullptr;
  std::vector<Demand> demands;
  LinkOsnrTable link_osnr;  // must cover both fibers of every link
  ModulationTable table = ModulationTable::standard();

  BigM big_m() const;
  void validate() const;  // throws InvalidParams / MissingEntry
};

inline constexpr std::size_t kMaxRows = 1'000'000;

/// Builds the node-arc formulation. Throws InstanceTooLarge above kMaxRows.
Model build(const Instance& instance);

/// Closed-form row count of every family for |R| demands, |L| links,
/// |N| nodes and |M| formats. Ordered pairs: |R| (|R| - 1).
std::map<Family, std::size_t> expected_family_counts(std::size_t demands, std::size_t links, std::size_t nodes,
                                                  std::size_t formats);

/// Variable values encoding the given assignments (one per demand, in
/// demand order), with C equal to their max end slot. A valid heuristic or
/// oracle solution lifts to a point satisfying every constraint.
std::vector<double> lift_solution(const Model& model, const Instance& instance,
                                  std::span<const LightpathAssignment> assignments);

/// Sidecar mapping mangled names back to demands, links, nodes and formats.
nlohmann::json names_sidecar(const Model& model, const Instance& instance);

/// Writes <stem>.lp and <stem>.names.json.
void export_lp(const Instance& instance, const std::filesystem::path& stem);

}  // namespace hueon::milp
