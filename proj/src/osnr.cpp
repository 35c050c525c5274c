#include "hueon/osnr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hueon/errors.hpp"
#include "hueon/modulation.hpp"

namespace hueon {

void PhyParams::validate() const {
  if (!(noise_figure_db > 0.0)) throw InvalidParams("noise figure must be positive");
  if (!(symbol_rate_gbaud > 0.0)) throw InvalidParams("symbol rate must be positive");
  if (!(center_frequency_thz > 0.0)) throw InvalidParams("center frequency must be positive");
  if (!(max_span_km > 0.0)) throw InvalidParams("span length must be positive");
  if (!std::isfinite(launch_power_dbm)) throw InvalidParams("launch power must be finite");
}

std::size_t span_count(double distance_km, double max_span_km) {
  if (!(distance_km > 0.0) || !(max_span_km > 0.0)) throw InvalidParams("distances must be positive");
  return static_cast<std::size_t>(std::ceil(distance_km / max_span_km));
}

double default_link_osnr(const Link& link, FiberKind kind, const PhyParams& params) {
  params.validate();
  const std::size_t spans = span_count(link.distance_km, params.max_span_km);
  const double span_km = link.distance_km / static_cast<double>(spans);
  const double loss_db = link.fiber(kind).attenuation_db_per_km * span_km;
  if (!(loss_db > 0.0)) throw InvalidParams("span loss must be positive");

  const double gain = db_to_linear(loss_db);
  const double nf = db_to_linear(params.noise_figure_db);
  const double photon_energy = kPlanckConstant * params.center_frequency_thz * 1e12;
  const double noise_bandwidth = params.symbol_rate_gbaud * 1e9;
  const double launch_w = db_to_linear(params.launch_power_dbm) * 1e-3;

  const double per_span = nf * photon_energy * gain * noise_bandwidth / launch_w;
  return static_cast<double>(spans) * per_span;
}

LinkOsnrTable LinkOsnrTable::from_model(const Topology& topology, const PhyParams& params) {
  LinkOsnrTable table(topology.link_count());
  for (LinkId l = 0; l < topology.link_count(); ++l) {
    table.set(l, FiberKind::Ssmf, default_link_osnr(topology.link(l), FiberKind::Ssmf, params));
    table.set(l, FiberKind::Ull, default_link_osnr(topology.link(l), FiberKind::Ull, params));
  }
  return table;
}

void LinkOsnrTable::set(LinkId link, FiberKind kind, double reciprocal) {
  if (!(reciprocal >= 0.0) || !std::isfinite(reciprocal)) {
    throw InvalidParams("reciprocal OSNR must be finite and non-negative");
  }
  if (link >= entries_.size()) entries_.resize(link + 1);
  auto& entry = entries_[link];
  const FiberKind other = kind == FiberKind::Ssmf ? FiberKind::Ull : FiberKind::Ssmf;
  if (const auto& o = entry[index_of(other)]) {
    const double ssmf = kind == FiberKind::Ssmf ? reciprocal : *o;
    const double ull = kind == FiberKind::Ull ? reciprocal : *o;
    if (ull > ssmf) {
      throw InvalidParams("link " + std::to_string(link) + ": ULL reciprocal OSNR exceeds SSMF");
    }
  }
  entry[index_of(kind)] = reciprocal;
}

bool LinkOsnrTable::has(LinkId link, FiberKind kind) const {
  return link < entries_.size() && entries_[link][index_of(kind)].has_value();
}

double LinkOsnrTable::reciprocal(LinkId link, FiberKind kind) const {
  if (!has(link, kind)) {
    throw MissingEntry("no OSNR data for link " + std::to_string(link) + " " + std::string(to_string(kind)));
  }
  return *entries_[link][index_of(kind)];
}

double LinkOsnrTable::ull_gain(LinkId link) const {
  const double ull = reciprocal(link, FiberKind::Ull);
  const double ssmf = reciprocal(link, FiberKind::Ssmf);
  if (ull == 0.0) return ssmf == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return ssmf / ull;
}

PathOsnrLookup::Key PathOsnrLookup::normalize(std::span<const NodeId> route, std::span<const FiberKind> fibers) {
  Key key{{route.begin(), route.end()}, {fibers.begin(), fibers.end()}};
  if (!key.first.empty() && key.first.front() > key.first.back()) {
    std::reverse(key.first.begin(), key.first.end());
    std::reverse(key.second.begin(), key.second.end());
  }
  return key;
}

void PathOsnrLookup::add(std::vector<NodeId> route, std::vector<FiberKind> fibers, double osnr_db) {
  if (route.size() < 2) throw EmptyRoute("lookup route needs at least two nodes");
  if (fibers.size() + 1 != route.size()) throw InvalidParams("lookup entry needs one fiber per route link");
  if (!(osnr_db > 0.0)) throw InvalidParams("lookup OSNR must be a positive dB value");
  entries_[normalize(route, fibers)] = osnr_db;
}

std::optional<double> PathOsnrLookup::find_db(std::span<const NodeId> route,
                                              std::span<const FiberKind> fibers) const {
  auto it = entries_.find(normalize(route, fibers));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<double> OsnrProvider::try_path_osnr_linear(std::span<const NodeId> route,
                                                         std::span<const LinkId> links,
                                                         std::span<const FiberKind> fibers) const {
  if (links.empty()) throw EmptyRoute("path OSNR of an empty route");
  if (fibers.size() != links.size()) throw InvalidParams("fiber choice must cover every route link");
  if (const auto* table = link_table()) {
    double sum = 0.0;
    for (std::size_t i = 0; i < links.size(); ++i) {
      if (!table->has(links[i], fibers[i])) return std::nullopt;
      sum += table->reciprocal(links[i], fibers[i]);
    }
    if (sum == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / sum;
  }
  const auto db = lookup()->find_db(route, fibers);
  if (!db) return std::nullopt;
  return db_to_linear(*db);
}

double OsnrProvider::path_osnr_linear(std::span<const NodeId> route, std::span<const LinkId> links,
                                      std::span<const FiberKind> fibers) const {
  if (auto v = try_path_osnr_linear(route, links, fibers)) return *v;
  throw MissingEntry("no OSNR data for the requested path");
}

double path_osnr(const Topology& topology, std::span<const NodeId> route, std::span<const FiberKind> fibers,
                 const OsnrProvider& provider) {
  if (route.size() < 2) throw EmptyRoute("path OSNR of an empty route");
  const auto links = topology.route_links(route);
  return linear_to_db(provider.path_osnr_linear(route, links, fibers));
}

}  // namespace hueon
