#include "hueon/network.hpp"

#include <algorithm>
#include <string>

#include "hueon/errors.hpp"

namespace hueon {

NetworkState::NetworkState(const Topology& topology) : topology_(&topology) {
  fibers_.reserve(topology.link_count());
  for (std::size_t l = 0; l < topology.link_count(); ++l) {
    fibers_.push_back({SpectrumMap(topology.total_slots()), SpectrumMap(topology.total_slots())});
  }
}

bool NetworkState::window_free(LinkId link, FiberKind kind, Window window) const {
  return spectrum(link, kind).window_free(window);
}

void NetworkState::reserve(const LightpathAssignment& a) {
  if (live_.contains(a.demand)) {
    throw InvalidParams("demand " + std::to_string(a.demand) + " already holds a lightpath");
  }
  if (a.links.empty() || a.links.size() != a.fibers.size() || a.route.size() != a.links.size() + 1) {
    throw InvalidParams("assignment needs one fiber per route link");
  }
  if (topology_->route_links(a.route) != a.links) throw InvalidParams("assignment links do not match its route");
  std::vector<NodeId> nodes(a.route);
  std::sort(nodes.begin(), nodes.end());
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
    throw InvalidParams("route of demand " + std::to_string(a.demand) + " revisits a node");
  }
  if (a.fs_count == 0 || a.end_slot() > total_slots()) {
    throw RangeError("window [" + std::to_string(a.start_slot) + ", " + std::to_string(a.end_slot()) +
                     ") exceeds " + std::to_string(total_slots()) + " slots");
  }
  for (std::size_t i = 0; i < a.links.size(); ++i) {
    if (!window_free(a.links[i], a.fibers[i], a.window())) {
      throw OverlapError("window [" + std::to_string(a.start_slot) + ", " + std::to_string(a.end_slot()) +
                         ") busy on " + std::string(to_string(a.fibers[i])) + " of link " +
                         topology_->link_label(a.links[i]));
    }
  }
  // simple route: no link repeats, so the pre-check above is exhaustive
  for (std::size_t i = 0; i < a.links.size(); ++i) {
    fibers_[a.links[i]][index_of(a.fibers[i])].occupy(a.window(), a.demand);
  }
  live_.emplace(a.demand, a);
}

void NetworkState::release(DemandId demand) {
  auto it = live_.find(demand);
  if (it == live_.end()) throw UnknownDemand("demand " + std::to_string(demand) + " holds no lightpath");
  const LightpathAssignment& a = it->second;
  for (std::size_t i = 0; i < a.links.size(); ++i) {
    fibers_[a.links[i]][index_of(a.fibers[i])].vacate(a.window(), demand);
  }
  live_.erase(it);
}

const LightpathAssignment& NetworkState::assignment(DemandId demand) const {
  auto it = live_.find(demand);
  if (it == live_.end()) throw UnknownDemand("demand " + std::to_string(demand) + " holds no lightpath");
  return it->second;
}

std::size_t NetworkState::max_fs_used() const {
  std::size_t best = 0;
  for (const auto& pair : fibers_) {
    for (const SpectrumMap& map : pair) best = std::max(best, map.highest_used());
  }
  return best;
}

std::size_t NetworkState::occupied_slots(FiberKind kind) const {
  std::size_t n = 0;
  for (const auto& pair : fibers_) n += pair[index_of(kind)].occupied_count();
  return n;
}

std::size_t NetworkState::occupied_slots() const {
  return occupied_slots(FiberKind::Ssmf) + occupied_slots(FiberKind::Ull);
}

}  // namespace hueon
