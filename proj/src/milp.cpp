#include "hueon/milp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hueon/errors.hpp"

namespace hueon::milp {

std::string_view tag(Family family) {
  switch (family) {
    case Family::SourceDegree: return "src";
    case Family::SinkDegree: return "dst";
    case Family::TransitDegree: return "transit";
    case Family::UllOnRoute: return "z_route";
    case Family::SsmfOnRoute: return "e_route";
    case Family::FiberExclusive: return "fib_excl";
    case Family::FiberCovers: return "fib_cover";
    case Family::OneFormat: return "one_fmt";
    case Family::OsnrGate: return "o_gate";
    case Family::OsnrUpper: return "o_up";
    case Family::OsnrLower: return "o_lo";
    case Family::PathOsnr: return "osnr_sum";
    case Family::FormatThreshold: return "fmt_thr";
    case Family::SlotCount: return "slots";
    case Family::ShareUll: return "share_u";
    case Family::ShareSsmf: return "share_s";
    case Family::OrderStart: return "ord_start";
    case Family::OrderEnd: return "ord_end";
    case Family::UllDemandEnd: return "u_end";
    case Family::UllRouteGate: return "u_gate";
    case Family::UllRouteUpper: return "u_up";
    case Family::UllRouteLower: return "u_lo";
    case Family::UllLinkMax: return "u_max";
    case Family::SsmfDemandEnd: return "s_end";
    case Family::SsmfRouteGate: return "s_gate";
    case Family::SsmfRouteUpper: return "s_up";
    case Family::SsmfRouteLower: return "s_lo";
    case Family::SsmfLinkMax: return "s_max";
    case Family::LinkMaxUll: return "link_u";
    case Family::LinkMaxSsmf: return "link_s";
    case Family::NetworkMax: return "net_max";
    case Family::WindowBound: return "win";
  }
  return "?";
}

double Constraint::lhs(std::span<const double> values) const {
  double sum = 0.0;
  for (const Term& t : terms) sum += t.coef * values[t.var];
  return sum;
}

double Constraint::violation(std::span<const double> values) const {
  const double v = lhs(values);
  switch (sense) {
    case Sense::Le: return std::max(0.0, v - rhs);
    case Sense::Ge: return std::max(0.0, rhs - v);
    case Sense::Eq: return std::abs(v - rhs);
  }
  return 0.0;
}

std::size_t Model::add_var(std::string name, VarType type, double lower, double upper, std::string meaning) {
  if (index_.contains(name)) throw InvalidParams("duplicate variable " + name);
  index_.emplace(name, vars_.size());
  vars_.push_back({std::move(name), type, lower, upper, std::move(meaning)});
  return vars_.size() - 1;
}

std::size_t Model::add_constraint(std::string name, Family family, std::vector<Term> terms, Sense sense,
                                  double rhs) {
  cons_.push_back({std::move(name), family, std::move(terms), sense, rhs});
  return cons_.size() - 1;
}

std::optional<std::size_t> Model::find_var(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Model::var(const std::string& name) const {
  if (auto v = find_var(name)) return *v;
  throw InvalidParams("no variable " + name);
}

std::size_t Model::family_count(Family family) const {
  return static_cast<std::size_t>(
      std::count_if(cons_.begin(), cons_.end(), [&](const Constraint& c) { return c.family == family; }));
}

std::vector<std::string> Model::check(std::span<const double> values, double tol) const {
  if (values.size() != vars_.size()) throw InvalidParams("value vector does not match the model");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const Variable& v = vars_[i];
    const double x = values[i];
    if (x < v.lower - tol || x > v.upper + tol) out.push_back(v.name + " out of bounds");
    if (v.type != VarType::Continuous && std::abs(x - std::round(x)) > tol) out.push_back(v.name + " not integral");
  }
  for (const Constraint& c : cons_) {
    if (c.violation(values) > tol) out.push_back(c.name);
  }
  return out;
}

namespace {

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_terms(std::ostream& out, const std::vector<Term>& terms, const std::vector<Variable>& vars) {
  std::size_t on_line = 0;
  bool first = true;
  for (const Term& t : terms) {
    if (t.coef == 0.0) continue;
    if (on_line == 8) {
      out << "\n   ";
      on_line = 0;
    }
    const double mag = std::abs(t.coef);
    out << (t.coef < 0 ? (first ? "-" : " -") : (first ? "" : " +"));
    if (!first || t.coef < 0) out << ' ';
    if (mag != 1.0) out << number(mag) << ' ';
    out << vars[t.var].name;
    first = false;
    ++on_line;
  }
  if (first) out << "0 " << vars.front().name;  // empty rows still need a variable
}

}  // namespace

std::string Model::to_lp() const {
  std::ostringstream out;
  out << "\\ hueon node-arc formulation: " << vars_.size() << " variables, " << cons_.size() << " constraints\n";
  out << "Minimize\n obj: " << vars_.at(objective_).name << "\nSubject To\n";
  for (const Constraint& c : cons_) {
    out << ' ' << c.name << ": ";
    write_terms(out, c.terms, vars_);
    out << (c.sense == Sense::Le ? " <= " : c.sense == Sense::Ge ? " >= " : " = ") << number(c.rhs) << '\n';
  }
  out << "Bounds\n";
  for (const Variable& v : vars_) {
    if (v.type == VarType::Binary) continue;
    out << ' ' << number(v.lower) << " <= " << v.name << " <= " << number(v.upper) << '\n';
  }
  out << "Binaries\n";
  for (const Variable& v : vars_) {
    if (v.type == VarType::Binary) out << ' ' << v.name << '\n';
  }
  out << "Generals\n";
  for (const Variable& v : vars_) {
    if (v.type == VarType::Integer) out << ' ' << v.name << '\n';
  }
  out << "End\n";
  return out.str();
}

BigM Instance::big_m() const {
  std::size_t max_f = 0;
  for (const Demand& d : demands) {
    for (const auto& m : table.formats()) max_f = std::max(max_f, required_fs(d.bandwidth_gbps, m));
  }
  double r_sum = 0.0;
  for (LinkId l = 0; l < topology->link_count(); ++l) {
    r_sum += std::max(link_osnr.reciprocal(l, FiberKind::Ssmf), link_osnr.reciprocal(l, FiberKind::Ull));
  }
  return {static_cast<double>(topology->total_slots() + max_f), 2.0 * r_sum};
}

void Instance::validate() const {
  if (topology == nullptr) throw InvalidParams("instance needs a topology");
  if (demands.empty()) throw InvalidParams("instance needs at least one demand");
  for (const Demand& d : demands) {
    if (d.src == d.dst || d.src >= topology->node_count() || d.dst >= topology->node_count()) {
      throw InvalidParams("demand " + std::to_string(d.id) + " has bad endpoints");
    }
    if (!(d.bandwidth_gbps > 0.0)) throw InvalidBandwidth("demand " + std::to_string(d.id) + " bandwidth <= 0");
  }
  if (link_osnr.link_count() != topology->link_count()) throw InvalidParams("link OSNR table size mismatch");
  for (LinkId l = 0; l < topology->link_count(); ++l) {
    for (FiberKind k : kFiberKinds) link_osnr.reciprocal(l, k);  // MissingEntry
  }
}

std::map<Family, std::size_t> expected_family_counts(std::size_t r, std::size_t l, std::size_t n, std::size_t m) {
  const std::size_t pairs = r * (r > 0 ? r - 1 : 0);
  std::map<Family, std::size_t> out;
  for (Family f : {Family::SourceDegree, Family::SinkDegree, Family::OneFormat, Family::PathOsnr, Family::SlotCount,
                   Family::WindowBound}) {
    out[f] = r;
  }
  out[Family::TransitDegree] = r * (n >= 2 ? n - 2 : 0);
  for (Family f : {Family::UllOnRoute, Family::SsmfOnRoute, Family::FiberExclusive, Family::FiberCovers,
                   Family::OsnrGate, Family::OsnrUpper, Family::OsnrLower, Family::UllDemandEnd,
                   Family::UllRouteGate, Family::UllRouteUpper, Family::UllRouteLower, Family::UllLinkMax,
                   Family::SsmfDemandEnd, Family::SsmfRouteGate, Family::SsmfRouteUpper, Family::SsmfRouteLower,
                   Family::SsmfLinkMax}) {
    out[f] = r * l;
  }
  out[Family::FormatThreshold] = r * m;
  out[Family::ShareUll] = pairs * l;
  out[Family::ShareSsmf] = pairs * l;
  out[Family::OrderStart] = pairs;
  out[Family::OrderEnd] = pairs;
  for (Family f : {Family::LinkMaxUll, Family::LinkMaxSsmf, Family::NetworkMax}) out[f] = l;
  return out;
}

namespace {

std::string dn(std::size_t d) { return "d" + std::to_string(d); }
std::string ln(std::size_t l) { return "l" + std::to_string(l); }

std::string cname(Family f, const std::string& suffix) { return std::string(tag(f)) + "_" + suffix; }

}  // namespace

Model build(const Instance& inst) {
  inst.validate();
  const Topology& topo = *inst.topology;
  const std::size_t R = inst.demands.size();
  const std::size_t L = topo.link_count();
  const std::size_t N = topo.node_count();
  const std::size_t M = inst.table.size();
  const double beta = static_cast<double>(topo.total_slots());

  std::size_t rows = 0;
  for (const auto& [f, c] : expected_family_counts(R, L, N, M)) rows += c;
  if (rows > kMaxRows) {
    throw InstanceTooLarge("formulation would have " + std::to_string(rows) + " rows (limit " +
                           std::to_string(kMaxRows) + ")");
  }

  const BigM big = inst.big_m();
  double r_total = 0.0;
  for (LinkId l = 0; l < L; ++l) r_total += inst.link_osnr.reciprocal(l, FiberKind::Ssmf);

  Model model;
  const auto B = VarType::Binary;
  const auto I = VarType::Integer;
  const auto Cn = VarType::Continuous;

  // variables
  std::vector<std::vector<std::size_t>> g(R), z(R), e(R), o(R), xi(R), sig(R), ze(R), tau(R), rho(R), dl(R);
  std::vector<std::size_t> S(R), F(R), orec(R);
  std::vector<std::vector<std::size_t>> X(R, std::vector<std::size_t>(R)), th(R, std::vector<std::size_t>(R));
  for (std::size_t d = 0; d < R; ++d) {
    const Demand& dem = inst.demands[d];
    const std::string who = "demand " + std::to_string(dem.id) + " (" + topo.node_name(dem.src) + "->" +
                            topo.node_name(dem.dst) + ")";
    for (LinkId l = 0; l < L; ++l) {
      const std::string on = who + " on link " + topo.link_label(l);
      const std::string sfx = dn(d) + "_" + ln(l);
      g[d].push_back(model.add_var("g_" + sfx, B, 0, 1, "route of " + on));
      z[d].push_back(model.add_var("Z_" + sfx, B, 0, 1, "ULL fiber used by " + on));
      e[d].push_back(model.add_var("E_" + sfx, B, 0, 1, "SSMF used by " + on));
      o[d].push_back(model.add_var("O_" + sfx, Cn, 0, inst.link_osnr.reciprocal(l, FiberKind::Ssmf),
                                   "reciprocal OSNR contributed to " + on));
      xi[d].push_back(model.add_var("xi_" + sfx, I, 0, beta, "end slot of " + on + " if on ULL"));
      sig[d].push_back(model.add_var("sig_" + sfx, I, 0, beta, "end slot of " + on + " on ULL, gated by route"));
      ze[d].push_back(model.add_var("zeta_" + sfx, I, 0, beta, "end slot of " + on + " if on SSMF"));
      tau[d].push_back(model.add_var("tau_" + sfx, I, 0, beta, "end slot of " + on + " on SSMF, gated by route"));
    }
    for (NodeId n = 0; n < N; ++n) {
      rho[d].push_back(model.add_var("rho_" + dn(d) + "_n" + std::to_string(n), B, 0, 1,
                                     who + " passes node " + topo.node_name(n)));
    }
    std::size_t max_f = 0;
    for (std::size_t m = 0; m < M; ++m) {
      dl[d].push_back(model.add_var("dl_" + dn(d) + "_m" + std::to_string(m), B, 0, 1,
                                    who + " uses " + inst.table[m].name));
      max_f = std::max(max_f, required_fs(dem.bandwidth_gbps, inst.table[m]));
    }
    S[d] = model.add_var("S_" + dn(d), I, 0, beta - 1, "first slot (0-based) of " + who);
    F[d] = model.add_var("F_" + dn(d), I, 0, static_cast<double>(max_f), "slot count of " + who);
    orec[d] = model.add_var("Orec_" + dn(d), Cn, 0, r_total, "reciprocal path OSNR of " + who);
  }
  for (std::size_t a = 0; a < R; ++a) {
    for (std::size_t b = 0; b < R; ++b) {
      if (a == b) continue;
      const std::string sfx = dn(a) + "_" + dn(b);
      X[a][b] = model.add_var("X_" + sfx, B, 0, 1, "start of " + dn(a) + " above start of " + dn(b));
      th[a][b] = model.add_var("th_" + sfx, B, 0, 1, dn(a) + " and " + dn(b) + " share a fiber");
    }
  }
  std::vector<std::size_t> phiU(L), phiS(L), eta(L);
  for (LinkId l = 0; l < L; ++l) {
    const std::string lab = topo.link_label(l);
    phiU[l] = model.add_var("phiU_" + ln(l), I, 0, beta, "highest used slot on the ULL fiber of " + lab);
    phiS[l] = model.add_var("phiS_" + ln(l), I, 0, beta, "highest used slot on the SSMF of " + lab);
    eta[l] = model.add_var("eta_" + ln(l), I, 0, beta, "highest used slot on link " + lab);
  }
  const std::size_t C = model.add_var("C", I, 0, beta, "highest used slot in the network");
  model.set_objective(C);

  const double Ms = big.spectrum;
  const double Mo = big.osnr;
  using S_ = Sense;

  for (std::size_t d = 0; d < R; ++d) {
    const Demand& dem = inst.demands[d];
    const std::string D = dn(d);
    // route
    for (NodeId n = 0; n < N; ++n) {
      std::vector<Term> t;
      for (LinkId l : topo.incident(n)) t.push_back({g[d][l], 1.0});
      const std::string sfx = D + "_n" + std::to_string(n);
      if (n == dem.src) {
        model.add_constraint(cname(Family::SourceDegree, sfx), Family::SourceDegree, t, S_::Eq, 1.0);
      } else if (n == dem.dst) {
        model.add_constraint(cname(Family::SinkDegree, sfx), Family::SinkDegree, t, S_::Eq, 1.0);
      } else {
        t.push_back({rho[d][n], -2.0});
        model.add_constraint(cname(Family::TransitDegree, sfx), Family::TransitDegree, t, S_::Eq, 0.0);
      }
    }
    // fibers and OSNR
    std::vector<Term> osnr_sum{{orec[d], 1.0}};
    for (LinkId l = 0; l < L; ++l) {
      const std::string sfx = D + "_" + ln(l);
      const double rS = inst.link_osnr.reciprocal(l, FiberKind::Ssmf);
      const double rU = inst.link_osnr.reciprocal(l, FiberKind::Ull);
      model.add_constraint(cname(Family::UllOnRoute, sfx), Family::UllOnRoute, {{z[d][l], 1}, {g[d][l], -1}},
                           S_::Le, 0);
      model.add_constraint(cname(Family::SsmfOnRoute, sfx), Family::SsmfOnRoute, {{e[d][l], 1}, {g[d][l], -1}},
                           S_::Le, 0);
      model.add_constraint(cname(Family::FiberExclusive, sfx), Family::FiberExclusive,
                           {{e[d][l], 1}, {z[d][l], 1}}, S_::Le, 1);
      model.add_constraint(cname(Family::FiberCovers, sfx), Family::FiberCovers,
                           {{e[d][l], 1}, {g[d][l], -1}, {z[d][l], 1}}, S_::Ge, 0);
      model.add_constraint(cname(Family::OsnrGate, sfx), Family::OsnrGate, {{o[d][l], 1}, {g[d][l], -Mo}}, S_::Le,
                           0);
      model.add_constraint(cname(Family::OsnrUpper, sfx), Family::OsnrUpper,
                           {{o[d][l], 1}, {z[d][l], -rU}, {e[d][l], -rS}}, S_::Le, 0);
      model.add_constraint(cname(Family::OsnrLower, sfx), Family::OsnrLower,
                           {{o[d][l], 1}, {z[d][l], -rU}, {e[d][l], -rS}, {g[d][l], -Mo}}, S_::Ge, -Mo);
      osnr_sum.push_back({o[d][l], -1.0});
    }
    std::vector<Term> one;
    std::vector<Term> slots{{F[d], 1.0}};
    for (std::size_t m = 0; m < M; ++m) {
      one.push_back({dl[d][m], 1.0});
      slots.push_back({dl[d][m], -static_cast<double>(required_fs(dem.bandwidth_gbps, inst.table[m]))});
      const double rec_m = 1.0 / db_to_linear(inst.table[m].osnr_threshold_db);
      model.add_constraint(cname(Family::FormatThreshold, D + "_m" + std::to_string(m)), Family::FormatThreshold,
                           {{orec[d], 1}, {dl[d][m], Mo}}, S_::Le, Mo + rec_m);
    }
    model.add_constraint(cname(Family::OneFormat, D), Family::OneFormat, one, S_::Eq, 1);
    model.add_constraint(cname(Family::PathOsnr, D), Family::PathOsnr, osnr_sum, S_::Eq, 0);
    model.add_constraint(cname(Family::SlotCount, D), Family::SlotCount, slots, S_::Eq, 0);
    model.add_constraint(cname(Family::WindowBound, D), Family::WindowBound, {{S[d], 1}, {F[d], 1}}, S_::Le, beta);
  }

  for (std::size_t a = 0; a < R; ++a) {
    for (std::size_t b = 0; b < R; ++b) {
      if (a == b) continue;
      const std::string P = dn(a) + "_" + dn(b);
      for (LinkId l = 0; l < L; ++l) {
        model.add_constraint(cname(Family::ShareUll, P + "_" + ln(l)), Family::ShareUll,
                             {{th[a][b], 1}, {z[a][l], -1}, {z[b][l], -1}}, S_::Ge, -1);
        model.add_constraint(cname(Family::ShareSsmf, P + "_" + ln(l)), Family::ShareSsmf,
                             {{th[a][b], 1}, {e[a][l], -1}, {e[b][l], -1}}, S_::Ge, -1);
      }
      model.add_constraint(cname(Family::OrderStart, P), Family::OrderStart,
                           {{S[b], 1}, {S[a], -1}, {X[a][b], Ms}, {th[a][b], Ms}}, S_::Le, 2 * Ms - 1);
      model.add_constraint(cname(Family::OrderEnd, P), Family::OrderEnd,
                           {{S[a], 1}, {F[a], 1}, {S[b], -1}, {X[a][b], -Ms}, {th[a][b], Ms}}, S_::Le, Ms);
    }
  }

  for (std::size_t d = 0; d < R; ++d) {
    for (LinkId l = 0; l < L; ++l) {
      const std::string sfx = dn(d) + "_" + ln(l);
      model.add_constraint(cname(Family::UllDemandEnd, sfx), Family::UllDemandEnd,
                           {{xi[d][l], 1}, {S[d], -1}, {F[d], -1}, {z[d][l], -beta}}, S_::Ge, -beta);
      model.add_constraint(cname(Family::UllRouteGate, sfx), Family::UllRouteGate, {{sig[d][l], 1}, {g[d][l], -Ms}},
                           S_::Le, 0);
      model.add_constraint(cname(Family::UllRouteUpper, sfx), Family::UllRouteUpper,
                           {{sig[d][l], 1}, {xi[d][l], -1}}, S_::Le, 0);
      model.add_constraint(cname(Family::UllRouteLower, sfx), Family::UllRouteLower,
                           {{sig[d][l], 1}, {xi[d][l], -1}, {g[d][l], -Ms}}, S_::Ge, -Ms);
      model.add_constraint(cname(Family::UllLinkMax, sfx), Family::UllLinkMax, {{phiU[l], 1}, {sig[d][l], -1}},
                           S_::Ge, 0);
      model.add_constraint(cname(Family::SsmfDemandEnd, sfx), Family::SsmfDemandEnd,
                           {{ze[d][l], 1}, {S[d], -1}, {F[d], -1}, {e[d][l], -beta}}, S_::Ge, -beta);
      model.add_constraint(cname(Family::SsmfRouteGate, sfx), Family::SsmfRouteGate,
                           {{tau[d][l], 1}, {g[d][l], -Ms}}, S_::Le, 0);
      model.add_constraint(cname(Family::SsmfRouteUpper, sfx), Family::SsmfRouteUpper,
                           {{tau[d][l], 1}, {ze[d][l], -1}}, S_::Le, 0);
      model.add_constraint(cname(Family::SsmfRouteLower, sfx), Family::SsmfRouteLower,
                           {{tau[d][l], 1}, {ze[d][l], -1}, {g[d][l], -Ms}}, S_::Ge, -Ms);
      model.add_constraint(cname(Family::SsmfLinkMax, sfx), Family::SsmfLinkMax, {{phiS[l], 1}, {tau[d][l], -1}},
                           S_::Ge, 0);
    }
  }
  for (LinkId l = 0; l < L; ++l) {
    model.add_constraint(cname(Family::LinkMaxUll, ln(l)), Family::LinkMaxUll, {{eta[l], 1}, {phiU[l], -1}}, S_::Ge,
                         0);
    model.add_constraint(cname(Family::LinkMaxSsmf, ln(l)), Family::LinkMaxSsmf, {{eta[l], 1}, {phiS[l], -1}},
                         S_::Ge, 0);
    model.add_constraint(cname(Family::NetworkMax, ln(l)), Family::NetworkMax, {{C, 1}, {eta[l], -1}}, S_::Ge, 0);
  }
  return model;
}

std::vector<double> lift_solution(const Model& model, const Instance& inst,
                                  std::span<const LightpathAssignment> assignments) {
  const Topology& topo = *inst.topology;
  const std::size_t R = inst.demands.size();
  if (assignments.size() != R) throw InvalidParams("need one assignment per demand");
  std::vector<double> x(model.variables().size(), 0.0);
  const auto set = [&](const std::string& name, double v) { x[model.var(name)] = v; };

  std::vector<std::vector<int>> fiber_of(R, std::vector<int>(topo.link_count(), -1));
  std::vector<double> phiU(topo.link_count(), 0.0), phiS(topo.link_count(), 0.0);
  for (std::size_t d = 0; d < R; ++d) {
    const LightpathAssignment& a = assignments[d];
    const std::string D = dn(d);
    const double end = static_cast<double>(a.end_slot());
    double orec = 0.0;
    for (std::size_t i = 0; i < a.links.size(); ++i) {
      const LinkId l = a.links[i];
      const std::string sfx = D + "_" + ln(l);
      const double r = inst.link_osnr.reciprocal(l, a.fibers[i]);
      fiber_of[d][l] = static_cast<int>(index_of(a.fibers[i]));
      set("g_" + sfx, 1);
      set("O_" + sfx, r);
      orec += r;
      if (a.fibers[i] == FiberKind::Ull) {
        set("Z_" + sfx, 1);
        set("xi_" + sfx, end);
        set("sig_" + sfx, end);
        phiU[l] = std::max(phiU[l], end);
      } else {
        set("E_" + sfx, 1);
        set("zeta_" + sfx, end);
        set("tau_" + sfx, end);
        phiS[l] = std::max(phiS[l], end);
      }
    }
    for (std::size_t i = 1; i + 1 < a.route.size(); ++i) set("rho_" + D + "_n" + std::to_string(a.route[i]), 1);
    set("dl_" + D + "_m" + std::to_string(inst.table.index_of(a.format.name)), 1);
    set("S_" + D, static_cast<double>(a.start_slot));
    set("F_" + D, static_cast<double>(a.fs_count));
    set("Orec_" + D, orec);
  }
  for (std::size_t a = 0; a < R; ++a) {
    for (std::size_t b = 0; b < R; ++b) {
      if (a == b) continue;
      bool share = false;
      for (LinkId l = 0; l < topo.link_count(); ++l) {
        share = share || (fiber_of[a][l] >= 0 && fiber_of[a][l] == fiber_of[b][l]);
      }
      const std::string P = dn(a) + "_" + dn(b);
      set("th_" + P, share ? 1 : 0);
      set("X_" + P, assignments[a].start_slot > assignments[b].start_slot ? 1 : 0);
    }
  }
  double c = 0.0;
  for (LinkId l = 0; l < topo.link_count(); ++l) {
    set("phiU_" + ln(l), phiU[l]);
    set("phiS_" + ln(l), phiS[l]);
    const double eta = std::max(phiU[l], phiS[l]);
    set("eta_" + ln(l), eta);
    c = std::max(c, eta);
  }
  set("C", c);
  return x;
}

nlohmann::json names_sidecar(const Model& model, const Instance& inst) {
  using nlohmann::json;
  const Topology& topo = *inst.topology;
  const BigM big = inst.big_m();
  json doc;
  doc["schema"] = "hueon-milp-names/1";
  doc["objective"] = model.variables().at(model.objective()).name;
  doc["total_slots"] = topo.total_slots();
  doc["big_m"] = {{"spectrum", big.spectrum}, {"osnr", big.osnr}};
  doc["demands"] = json::array();
  for (std::size_t d = 0; d < inst.demands.size(); ++d) {
    const Demand& dem = inst.demands[d];
    doc["demands"].push_back({{"index", d},
                              {"id", dem.id},
                              {"src", topo.node_name(dem.src)},
                              {"dst", topo.node_name(dem.dst)},
                              {"bandwidth_gbps", dem.bandwidth_gbps}});
  }
  doc["links"] = json::array();
  for (LinkId l = 0; l < topo.link_count(); ++l) {
    doc["links"].push_back({{"index", l},
                            {"label", topo.link_label(l)},
                            {"distance_km", topo.link(l).distance_km},
                            {"r_ssmf", inst.link_osnr.reciprocal(l, FiberKind::Ssmf)},
                            {"r_ull", inst.link_osnr.reciprocal(l, FiberKind::Ull)}});
  }
  doc["nodes"] = json::array();
  for (NodeId n = 0; n < topo.node_count(); ++n) doc["nodes"].push_back(topo.node_name(n));
  doc["formats"] = json::array();
  for (std::size_t m = 0; m < inst.table.size(); ++m) {
    doc["formats"].push_back({{"index", m},
                              {"name", inst.table[m].name},
                              {"capacity_gbps", inst.table[m].capacity_gbps},
                              {"osnr_threshold_db", inst.table[m].osnr_threshold_db}});
  }
  json families = json::object();
  for (std::size_t f = 0; f < kFamilyCount; ++f) {
    const auto fam = static_cast<Family>(f);
    families[std::string(tag(fam))] = model.family_count(fam);
  }
  doc["families"] = families;
  json vars = json::object();
  for (const Variable& v : model.variables()) vars[v.name] = v.meaning;
  doc["variables"] = vars;
  doc["notes"] = {
      "one_fmt uses the per-demand format indicator dl_<d>_<m>",
      "share_s couples the SSMF indicators of the two demands of the ordered pair",
      "win bounds S + F by total_slots; S is 0-based so C is the 1-based highest slot",
  };
  return doc;
}

void export_lp(const Instance& instance, const std::filesystem::path& stem) {
  const Model model = build(instance);
  std::filesystem::path lp = stem;
  lp += ".lp";
  std::filesystem::path names = stem;
  names += ".names.json";
  std::ofstream out(lp);
  if (!out) throw ConfigError("cannot write " + lp.string());
  out << model.to_lp();
  std::ofstream side(names);
  if (!side) throw ConfigError("cannot write " + names.string());
  side << names_sidecar(model, instance).dump(2) << '\n';
}

}  // namespace hueon::milp
