#include "hueon/validator.hpp"

#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace hueon {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Route: return "route";
    case ViolationKind::Range: return "range";
    case ViolationKind::Overlap: return "overlap";
    case ViolationKind::Continuity: return "continuity";
    case ViolationKind::Osnr: return "osnr";
    case ViolationKind::SlotCount: return "slot-count";
    case ViolationKind::StrayOccupancy: return "stray-occupancy";
  }
  return "?";
}

namespace {

using Occupancy = std::vector<std::vector<std::vector<DemandId>>>;  // [link][fiber][slot] -> owners

std::string fiber_label(const Topology& topology, LinkId l, FiberKind k) {
  return std::string(to_string(k)) + " of link " + topology.link_label(l);
}

// Walks the route by hand instead of using Topology::route_links so a
// malformed route is reported, not thrown.
bool walk_route(const Topology& topology, const LightpathAssignment& a, std::vector<Violation>& out) {
  const auto fail = [&](const std::string& why) {
    out.push_back({ViolationKind::Route, "demand " + std::to_string(a.demand) + ": " + why});
    return false;
  };
  if (a.route.size() < 2) return fail("route has fewer than two nodes");
  if (a.links.size() + 1 != a.route.size()) return fail("link list does not match the route");
  if (a.fibers.size() != a.links.size()) return fail("fiber choice does not cover every link");
  std::set<NodeId> seen;
  for (NodeId n : a.route) {
    if (n >= topology.node_count()) return fail("unknown node id " + std::to_string(n));
    if (!seen.insert(n).second) return fail("route revisits node " + topology.node_name(n));
  }
  for (std::size_t i = 0; i < a.links.size(); ++i) {
    if (a.links[i] >= topology.link_count()) return fail("unknown link id");
    const Link& link = topology.link(a.links[i]);
    const bool matches = (link.a == a.route[i] && link.b == a.route[i + 1]) ||
                         (link.b == a.route[i] && link.a == a.route[i + 1]);
    if (!matches) return fail("link " + topology.link_label(a.links[i]) + " does not join consecutive route nodes");
  }
  return true;
}

}  // namespace

std::vector<Violation> check_assignments(const Topology& topology, std::span<const LightpathAssignment> assignments,
                                         const ModulationTable& table, const OsnrProvider* osnr,
                                         std::span<const Demand> demands) {
  std::vector<Violation> out;
  const std::size_t beta = topology.total_slots();
  Occupancy occ(topology.link_count(),
                std::vector<std::vector<DemandId>>(2, std::vector<DemandId>(beta, kFreeSlot)));

  std::map<DemandId, const Demand*> by_id;
  for (const Demand& d : demands) by_id[d.id] = &d;

  for (std::size_t k = 0; k < assignments.size(); ++k) {
    const LightpathAssignment& a = assignments[k];
    const std::string who = "demand " + std::to_string(a.demand);
    if (!walk_route(topology, a, out)) continue;

    if (auto it = by_id.find(a.demand); it != by_id.end()) {
      const Demand& d = *it->second;
      const bool forward = a.route.front() == d.src && a.route.back() == d.dst;
      const bool backward = a.route.front() == d.dst && a.route.back() == d.src;
      if (!forward && !backward) out.push_back({ViolationKind::Route, who + ": route endpoints differ from demand"});
      if (d.bandwidth_gbps != a.bandwidth_gbps) {
        out.push_back({ViolationKind::SlotCount, who + ": bandwidth differs from demand"});
      }
    }

    if (a.fs_count == 0 || a.start_slot + a.fs_count > beta) {
      std::ostringstream msg;
      msg << who << ": window [" << a.start_slot << ", " << a.start_slot + a.fs_count << ") outside 0.." << beta;
      out.push_back({ViolationKind::Range, msg.str()});
      continue;
    }

    if (a.bandwidth_gbps > 0.0 && a.format.capacity_gbps > 0.0) {
      const auto need = static_cast<std::size_t>(std::ceil(a.bandwidth_gbps / a.format.capacity_gbps));
      if (need != a.fs_count) {
        out.push_back({ViolationKind::SlotCount, who + ": holds " + std::to_string(a.fs_count) + " slots, " +
                                                     a.format.name + " needs " + std::to_string(need)});
      }
    }

    if (osnr != nullptr) {
      const auto value = osnr->try_path_osnr_linear(a.route, a.links, a.fibers);
      if (!value) {
        out.push_back({ViolationKind::Osnr, who + ": no OSNR data for its path"});
      } else {
        const double need = std::pow(10.0, a.format.osnr_threshold_db / 10.0);
        if (*value < need) {
          std::ostringstream msg;
          msg << who << ": path OSNR " << 10.0 * std::log10(*value) << " dB below " << a.format.name << " threshold "
              << a.format.osnr_threshold_db << " dB";
          out.push_back({ViolationKind::Osnr, msg.str()});
        }
      }
      if (!table.find(a.format.name)) out.push_back({ViolationKind::Osnr, who + ": unknown format " + a.format.name});
    }

    for (std::size_t i = 0; i < a.links.size(); ++i) {
      auto& slots = occ[a.links[i]][index_of(a.fibers[i])];
      for (std::size_t s = a.start_slot; s < a.start_slot + a.fs_count; ++s) {
        // occupant is the assignment index, so a duplicated demand still clashes
        if (slots[s] != kFreeSlot) {
          std::ostringstream msg;
          msg << "slot " << s << " on " << fiber_label(topology, a.links[i], a.fibers[i]) << " claimed by demands "
              << assignments[slots[s]].demand << " and " << a.demand;
          out.push_back({ViolationKind::Overlap, msg.str()});
        } else {
          slots[s] = k;
        }
      }
    }
  }
  return out;
}

std::vector<Violation> check_state(const NetworkState& state, const ModulationTable& table, const OsnrProvider* osnr) {
  const Topology& topology = state.topology();
  std::vector<LightpathAssignment> live;
  live.reserve(state.live().size());
  for (const auto& [id, a] : state.live()) live.push_back(a);
  auto out = check_assignments(topology, live, table, osnr);

  // expected owner per slot, rebuilt from the live set
  Occupancy expected(topology.link_count(), std::vector<std::vector<DemandId>>(
                                                2, std::vector<DemandId>(state.total_slots(), kFreeSlot)));
  for (const auto& a : live) {
    if (a.links.size() != a.fibers.size()) continue;
    for (std::size_t i = 0; i < a.links.size(); ++i) {
      if (a.links[i] >= topology.link_count()) continue;
      for (std::size_t s = a.start_slot; s < a.start_slot + a.fs_count && s < state.total_slots(); ++s) {
        expected[a.links[i]][index_of(a.fibers[i])][s] = a.demand;
      }
    }
  }
  for (LinkId l = 0; l < topology.link_count(); ++l) {
    for (FiberKind k : kFiberKinds) {
      const auto owners = state.spectrum(l, k).owners();
      for (std::size_t s = 0; s < owners.size(); ++s) {
        const DemandId want = expected[l][index_of(k)][s];
        if (owners[s] == want) continue;
        std::ostringstream msg;
        msg << "slot " << s << " on " << fiber_label(topology, l, k) << ": state owner "
            << (owners[s] == kFreeSlot ? std::string("free") : std::to_string(owners[s])) << ", expected "
            << (want == kFreeSlot ? std::string("free") : std::to_string(want));
        out.push_back({want == kFreeSlot ? ViolationKind::StrayOccupancy : ViolationKind::Continuity, msg.str()});
      }
    }
  }
  return out;
}

}  // namespace hueon
